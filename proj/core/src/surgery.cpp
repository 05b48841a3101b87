#include "kirby/surgery.hpp"

#include "kirby/errors.hpp"

namespace kirby {

NormalFormDiagram surgery_on_loop(const NormalFormDiagram& d, const Word& x,
                                  int parity) {
  if (x.max_index() > d.num_one_handles) {
    throw MalformedInputError("loop word uses a 1-handle beyond the diagram");
  }
  if (parity != 0 && parity != 1) {
    throw MalformedInputError("surgery framing parity must be 0 or 1");
  }
  NormalFormDiagram out = d;
  out.handles.push_back({x, parity});
  return out;
}

NormalFormDiagram realize_presentation_by_surgery(
    int n, const Presentation& p, const std::vector<int>& framings) {
  if (p.num_generators != n) {
    throw PreconditionError(
        "presentation generator count must equal the 1-handle count");
  }
  if (framings.size() != p.relators.size()) {
    throw MalformedInputError(
        "framing vector length must equal the relator count");
  }
  NormalFormDiagram d;
  d.num_one_handles = n;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    d = surgery_on_loop(d, p.relators[i], framings[i]);
  }
  NormalFormDiagram result = canonicalize(d);
  if (result != canonicalize(from_presentation(p, framings))) {
    throw Error("surgery realization disagrees with the direct construction");
  }
  return result;
}

}  // namespace kirby
