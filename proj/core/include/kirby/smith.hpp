#ifndef KIRBY_SMITH_HPP
#define KIRBY_SMITH_HPP

#include <vector>

#include "kirby/integer_matrix.hpp"

namespace kirby {

/// Result of a Smith normal form computation: positive invariant factors
/// d_1 | d_2 | ... | d_r together with unimodular witnesses U, V such
/// that U * M * V is the diagonal matrix of the factors (padded with
/// zeros).  rank() equals the number of factors.
struct SmithForm {
  std::vector<Integer> invariant_factors;
  IntegerMatrix u;  // rows x rows
  IntegerMatrix v;  // cols x cols

  std::size_t rank() const { return invariant_factors.size(); }

  /// The diagonal matrix U*M*V is expected to equal, with the original
  /// shape.
  IntegerMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace kirby

#endif  // KIRBY_SMITH_HPP
