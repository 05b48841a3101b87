#include "kirby/integer_matrix.hpp"

#include "kirby/errors.hpp"

namespace kirby {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  }
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw PreconditionError("matrix product dimension mismatch");
  }
  IntegerMatrix m(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& v = at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        m.at(r, c) += v * rhs.at(k, c);
      }
    }
  }
  return m;
}

IntegerMatrix IntegerMatrix::block_sum(const IntegerMatrix& rhs) const {
  IntegerMatrix m(rows_ + rhs.rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  }
  for (std::size_t r = 0; r < rhs.rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      m.at(rows_ + r, cols_ + c) = rhs.at(r, c);
    }
  }
  return m;
}

bool IntegerMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (at(r, c) != at(c, r)) return false;
    }
  }
  return true;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) {
    throw PreconditionError("determinant requires a square matrix");
  }
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntegerMatrix w = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && w.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(w.at(k, c), w.at(swap_row, c));
      }
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        w.at(r, c) =
            (w.at(r, c) * w.at(k, k) - w.at(r, k) * w.at(k, c)) / prev;
      }
      w.at(r, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

// Diagonalizes by simultaneous row/column congruence.  Each pivot step
// applies row_i <- p*row_i - c*row_t and the matching column operation;
// the transformation matrix has determinant p != 0, so the signature is
// unchanged (scaling a diagonal entry by p^2 keeps its sign).
int symmetric_signature(const IntegerMatrix& m) {
  if (!m.is_symmetric()) {
    throw PreconditionError("signature requires a symmetric matrix");
  }
  const std::size_t n = m.rows();
  IntegerMatrix w = m;
  int signature = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (w.at(t, t) == 0) {
      // Pull a nonzero diagonal entry forward, or manufacture one from
      // an off-diagonal entry (row/col addition keeps the congruence
      // class: [[0,a],[a,0]] gains the diagonal entry 2a).
      std::size_t d = t + 1;
      while (d < n && w.at(d, d) == 0) ++d;
      if (d < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(w.at(t, c), w.at(d, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(w.at(r, t), w.at(r, d));
      } else {
        std::size_t oi = n, oj = n;
        for (std::size_t r = t; r < n && oi == n; ++r) {
          for (std::size_t c = r + 1; c < n; ++c) {
            if (w.at(r, c) != 0) {
              oi = r;
              oj = c;
              break;
            }
          }
        }
        if (oi == n) break;  // remaining block is zero
        for (std::size_t c = 0; c < n; ++c) w.at(oi, c) += w.at(oj, c);
        for (std::size_t r = 0; r < n; ++r) w.at(r, oi) += w.at(r, oj);
        if (oi != t) {
          for (std::size_t c = 0; c < n; ++c) {
            std::swap(w.at(t, c), w.at(oi, c));
          }
          for (std::size_t r = 0; r < n; ++r) {
            std::swap(w.at(r, t), w.at(r, oi));
          }
        }
      }
    }
    const Integer p = w.at(t, t);
    signature += p > 0 ? 1 : -1;
    for (std::size_t i = t + 1; i < n; ++i) {
      const Integer coeff = w.at(i, t);
      if (coeff == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        w.at(i, c) = p * w.at(i, c) - coeff * w.at(t, c);
      }
      for (std::size_t r = 0; r < n; ++r) {
        w.at(r, i) = p * w.at(r, i) - coeff * w.at(r, t);
      }
    }
  }
  return signature;
}

}  // namespace kirby
