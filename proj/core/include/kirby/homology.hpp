#ifndef KIRBY_HOMOLOGY_HPP
#define KIRBY_HOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "kirby/f2.hpp"
#include "kirby/integer_matrix.hpp"
#include "kirby/presentation.hpp"

namespace kirby {

/// H_1 of the presented group: free rank and torsion coefficients > 1 in
/// divisibility order.
struct H1Invariants {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool operator==(const H1Invariants&) const = default;

  /// "Z^r x Z/d1 x ..." ; the trivial group renders as "0".
  std::string str() const;
};

/// k x n exponent matrix of the presentation: entry (i, g-1) is the
/// exponent sum of generator g in relator i.
IntegerMatrix exponent_matrix(const Presentation& p);

/// Abelianization invariants, from the Smith form of the exponent
/// matrix (equivalently of its transpose).
H1Invariants h1_invariants(const Presentation& p);

/// Cellular coboundary C^1(X;F2) -> C^2(X;F2) of the presentation
/// complex: column g holds the mod-2 exponent sums of generator g across
/// the relators.  A cochain on 1-cells maps to its values on the relator
/// 2-cells.
F2Matrix coboundary_matrix(const Presentation& p);

/// A cochain chi with d(chi) = c, or nullopt when c is not a coboundary.
/// c must have one bit per relator.
std::optional<F2Vector> coboundary_witness(const Presentation& p,
                                           const F2Vector& c);

/// dim H^2(X; F2) = #relators - rank of the coboundary matrix.
std::size_t h2_f2_dimension(const Presentation& p);

}  // namespace kirby

#endif  // KIRBY_HOMOLOGY_HPP
