#ifndef KIRBY_SURGERY_HPP
#define KIRBY_SURGERY_HPP

#include <vector>

#include "kirby/diagram.hpp"

namespace kirby {

/// Net effect of surgery on an embedded loop representing x: the loop
/// becomes a new 2-handle pair with the chosen framing parity.  The
/// transient dot-erasing and meridian bookkeeping cancel out, so only
/// the appended pair (free_reduce(x), parity) remains; the 1-handle
/// count is unchanged.  parity must be 0 or 1.
NormalFormDiagram surgery_on_loop(const NormalFormDiagram& d, const Word& x,
                                  int parity);

/// Folds surgery_on_loop over all relators of p, starting from the
/// diagram of #_n S^1 x S^3 (n dotted circles, no 2-handles), and
/// returns the canonical form.  Asserts internally that the result
/// agrees with canonicalize(from_presentation(p, framings)); requires
/// p.num_generators == n.
NormalFormDiagram realize_presentation_by_surgery(
    int n, const Presentation& p, const std::vector<int>& framings);

}  // namespace kirby

#endif  // KIRBY_SURGERY_HPP
