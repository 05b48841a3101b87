#include "kirby/homology.hpp"

#include <string>

#include "kirby/errors.hpp"
#include "kirby/smith.hpp"

namespace kirby {

std::string H1Invariants::str() const {
  std::string out;
  if (free_rank == 1) {
    out = "Z";
  } else if (free_rank > 1) {
    out = "Z^" + std::to_string(free_rank);
  }
  for (const Integer& d : torsion) {
    if (!out.empty()) out += " x ";
    out += "Z/" + d.str();
  }
  return out.empty() ? "0" : out;
}

IntegerMatrix exponent_matrix(const Presentation& p) {
  check_presentation(p);
  IntegerMatrix e(p.relators.size(), p.num_generators);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (int g = 1; g <= p.num_generators; ++g) {
      e.at(i, g - 1) = p.relators[i].exponent_sum(g);
    }
  }
  return e;
}

H1Invariants h1_invariants(const Presentation& p) {
  const SmithForm snf = smith_normal_form(exponent_matrix(p));
  H1Invariants out;
  out.free_rank = p.num_generators - static_cast<int>(snf.rank());
  for (const Integer& d : snf.invariant_factors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

F2Matrix coboundary_matrix(const Presentation& p) {
  check_presentation(p);
  F2Matrix m(p.relators.size(), p.num_generators);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (int g = 1; g <= p.num_generators; ++g) {
      m.set(i, g - 1,
            static_cast<std::uint8_t>(p.relators[i].exponent_sum(g) & 1));
    }
  }
  return m;
}

std::optional<F2Vector> coboundary_witness(const Presentation& p,
                                           const F2Vector& c) {
  if (c.size() != p.relators.size()) {
    throw MalformedInputError(
        "cocycle length must equal the number of relators");
  }
  return f2_solve(coboundary_matrix(p), c);
}

std::size_t h2_f2_dimension(const Presentation& p) {
  return p.relators.size() - f2_rank(coboundary_matrix(p));
}

}  // namespace kirby
