#include "kirby/smith.hpp"

namespace kirby {

IntegerMatrix SmithForm::diagonal(std::size_t rows, std::size_t cols) const {
  IntegerMatrix d(rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    d.at(i, i) = invariant_factors[i];
  }
  return d;
}

namespace {

struct Reducer {
  IntegerMatrix a;
  IntegerMatrix u;
  IntegerMatrix v;

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(r1, c), a.at(r2, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(r1, c), u.at(r2, c));
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, c1), a.at(r, c2));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, c1), v.at(r, c2));
  }
  // row r1 += q * row r2
  void add_row(std::size_t r1, std::size_t r2, const Integer& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(r1, c) += q * a.at(r2, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(r1, c) += q * u.at(r2, c);
  }
  // col c1 += q * col c2
  void add_col(std::size_t c1, std::size_t c2, const Integer& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, c1) += q * a.at(r, c2);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, c1) += q * v.at(r, c2);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(r, c) = -a.at(r, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(r, c) = -u.at(r, c);
  }
};

// Deterministic pivot choice: smallest |value|, ties by row then column.
bool find_pivot(const IntegerMatrix& a, std::size_t t, std::size_t& pr,
                std::size_t& pc) {
  bool found = false;
  Integer best = 0;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      const Integer& x = a.at(r, c);
      if (x == 0) continue;
      Integer mag = x < 0 ? Integer(-x) : x;
      if (!found || mag < best) {
        found = true;
        best = mag;
        pr = r;
        pc = c;
      }
    }
  }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Reducer red{m, IntegerMatrix::identity(m.rows()),
              IntegerMatrix::identity(m.cols())};
  const std::size_t bound = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < bound; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(red.a, t, pr, pc)) break;
    red.swap_rows(t, pr);
    red.swap_cols(t, pc);

    for (bool dirty = true; dirty;) {
      dirty = false;
      // Reduce column t by euclidean steps until it is zero below the
      // pivot, then do the same for row t.  Remainders shrink the pivot,
      // so the loop terminates.
      for (std::size_t r = t + 1; r < red.a.rows(); ++r) {
        if (red.a.at(r, t) == 0) continue;
        Integer q = red.a.at(r, t) / red.a.at(t, t);
        red.add_row(r, t, -q);
        if (red.a.at(r, t) != 0) {
          red.swap_rows(t, r);  // remainder becomes the smaller pivot
          dirty = true;
        }
      }
      for (std::size_t c = t + 1; c < red.a.cols(); ++c) {
        if (red.a.at(t, c) == 0) continue;
        Integer q = red.a.at(t, c) / red.a.at(t, t);
        red.add_col(c, t, -q);
        if (red.a.at(t, c) != 0) {
          red.swap_cols(t, c);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide the whole remaining block; if not, fold the
      // offending row in and restart the reduction.
      for (std::size_t r = t + 1; r < red.a.rows() && !dirty; ++r) {
        for (std::size_t c = t + 1; c < red.a.cols(); ++c) {
          if (red.a.at(r, c) % red.a.at(t, t) != 0) {
            red.add_row(t, r, 1);
            dirty = true;
            break;
          }
        }
      }
    }
    if (red.a.at(t, t) < 0) red.negate_row(t);
  }

  SmithForm out;
  for (std::size_t t = 0; t < bound; ++t) {
    if (red.a.at(t, t) != 0) out.invariant_factors.push_back(red.a.at(t, t));
  }
  out.u = std::move(red.u);
  out.v = std::move(red.v);
  return out;
}

}  // namespace kirby
