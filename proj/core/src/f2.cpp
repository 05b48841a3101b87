#include "kirby/f2.hpp"

#include "kirby/errors.hpp"

namespace kirby {

F2Vector F2Vector::operator+(const F2Vector& rhs) const {
  if (bits.size() != rhs.bits.size()) {
    throw MalformedInputError("F2 vector sum dimension mismatch");
  }
  F2Vector out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    out.bits[i] = (bits[i] ^ rhs.bits[i]) & 1;
  }
  return out;
}

bool F2Vector::is_zero() const {
  for (auto b : bits) {
    if (b) return false;
  }
  return true;
}

F2Vector F2Matrix::column(std::size_t c) const {
  F2Vector out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
  return out;
}

F2Vector F2Matrix::apply(const F2Vector& x) const {
  if (x.size() != cols) {
    throw MalformedInputError("F2 matrix-vector dimension mismatch");
  }
  F2Vector out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint8_t acc = 0;
    for (std::size_t c = 0; c < cols; ++c) acc ^= at(r, c) & x[c];
    out[r] = acc;
  }
  return out;
}

namespace {

// Row echelon form of [m | b]; returns pivot column of each echelon row.
struct Echelon {
  F2Matrix m;
  F2Vector b;
  std::vector<std::size_t> pivot_cols;
};

Echelon eliminate(F2Matrix m, F2Vector b) {
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && !m.at(p, col)) ++p;
    if (p == m.rows) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols; ++c) {
        std::uint8_t tmp = m.at(row, c);
        m.set(row, c, m.at(p, c));
        m.set(p, c, tmp);
      }
      std::swap(b[row], b[p]);
    }
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r != row && m.at(r, col)) {
        for (std::size_t c = col; c < m.cols; ++c) {
          m.set(r, c, m.at(r, c) ^ m.at(row, c));
        }
        b[r] ^= b[row];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(b), std::move(pivots)};
}

}  // namespace

std::size_t f2_rank(const F2Matrix& m) {
  return eliminate(m, F2Vector(m.rows)).pivot_cols.size();
}

std::optional<F2Vector> f2_solve(const F2Matrix& m, const F2Vector& b) {
  if (b.size() != m.rows) {
    throw MalformedInputError("F2 solve dimension mismatch");
  }
  Echelon e = eliminate(m, b);
  for (std::size_t r = e.pivot_cols.size(); r < m.rows; ++r) {
    if (e.b[r]) return std::nullopt;
  }
  F2Vector x(m.cols);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    x[e.pivot_cols[r]] = e.b[r];
  }
  return x;
}

}  // namespace kirby
