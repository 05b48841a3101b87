#ifndef KIRBY_GROUP_TABLE_HPP
#define KIRBY_GROUP_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kirby/presentation.hpp"

namespace kirby {

/// A finite group given by its multiplication table.  Element 0 need not
/// be the identity; the identity is located during validation.
class GroupTable {
 public:
  /// Builds and validates a table.  `mul` is row-major with
  /// mul[a*order+b] = a*b.  Closure, identity, inverses and
  /// associativity are checked once; throws MalformedInputError on any
  /// failure.
  static GroupTable from_table(std::string name, int order,
                               std::vector<int> mul);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }

 private:
  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inverse_;
};

/// Built-in groups.
GroupTable cyclic_group(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
GroupTable symmetric_group_3();
GroupTable dihedral_group_4();   // order 8
GroupTable quaternion_group();   // order 8

/// Looks a group up by name: "Z/n", "V4" (= Z/2xZ/2), "S3", "D4", "Q8",
/// and products like "Z/2xZ/4", "Z/2xZ/2xZ/2".  Throws
/// MalformedInputError for unknown names.
GroupTable group_by_name(const std::string& name);

/// Every group of order <= 8 up to isomorphism (14 of them including the
/// trivial group).  Useful for exhaustive invariance checks.
std::vector<GroupTable> all_groups_up_to_order_8();

/// Number of homomorphisms from the presented group into G, counted by
/// exhaustive enumeration of |G|^n generator images.  An oracle for
/// desk-scale inputs (|G| <= 12, n <= 4), not a production path.
std::uint64_t hom_count(const Presentation& p, const GroupTable& g);

}  // namespace kirby

#endif  // KIRBY_GROUP_TABLE_HPP
