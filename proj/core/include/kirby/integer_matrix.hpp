#ifndef KIRBY_INTEGER_MATRIX_HPP
#define KIRBY_INTEGER_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace kirby {

/// Exact integer scalar.  All invariant computations feed equality
/// decisions, so intermediate growth must never round or overflow.
using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntegerMatrix transposed() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;

  /// Direct sum: block diagonal of *this and rhs.
  IntegerMatrix block_sum(const IntegerMatrix& rhs) const;

  bool is_symmetric() const;

  /// Exact determinant (square matrices), Bareiss fraction-free
  /// elimination.
  Integer determinant() const;

  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Signature of a symmetric integer matrix: the number of positive minus
/// the number of negative eigenvalues, computed exactly by symmetric
/// congruence reduction (no floating point).  Throws PreconditionError
/// on a non-symmetric input.
int symmetric_signature(const IntegerMatrix& m);

}  // namespace kirby

#endif  // KIRBY_INTEGER_MATRIX_HPP
