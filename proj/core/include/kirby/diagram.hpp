#ifndef KIRBY_DIAGRAM_HPP
#define KIRBY_DIAGRAM_HPP

#include <string>
#include <vector>

#include "kirby/f2.hpp"
#include "kirby/integer_matrix.hpp"
#include "kirby/presentation.hpp"

namespace kirby {

/// One 2-handle pair: the attaching word of the handle h_i over the
/// 1-handle generators, and its framing coefficient.  The 0-framed
/// meridian m_i is implicit, as are the 3- and 4-handles.
struct HandlePair {
  Word word;
  int framing = 0;

  bool operator==(const HandlePair&) const = default;
};

/// The combinatorial shadow of a normal-form Kirby diagram of a
/// thickening: n dotted circles (1-handles) and k 2-handle pairs, each
/// pair a framed attaching circle plus its 0-framed meridian, with no
/// other geometric linking.  Framings are arbitrary integers in the raw
/// state; a diagram is *normalized* when every framing lies in {0,1}.
struct NormalFormDiagram {
  int num_one_handles = 0;
  std::vector<HandlePair> handles;

  bool operator==(const NormalFormDiagram&) const = default;

  Presentation presentation() const;
  bool is_normalized() const;
};

/// The artifact's stand-in for the normal 1-type: the fundamental group
/// presentation, the framing cocycle over F2, and whether that cocycle
/// is a coboundary (the spin case).
struct NormalOneTypeData {
  Presentation presentation;
  F2Vector w_class;
  bool spin = false;

  bool operator==(const NormalOneTypeData&) const = default;
};

/// Builds the diagram of the double: the relators become attaching
/// circles, each with the given framing in {0,1} and an implicit
/// 0-framed meridian.  Throws MalformedInputError if the framing vector
/// length differs from the relator count or a framing is outside {0,1}.
NormalFormDiagram from_presentation(const Presentation& p,
                                    const std::vector<int>& framings);

/// Normal-form violations as data (empty means valid and normalized).
std::vector<std::string> validate(const NormalFormDiagram& d);

/// 2 - 2n + 2k (one 0-handle, n 1-handles, 2k 2-handles, n 3-handles,
/// one 4-handle).
int euler_characteristic(const NormalFormDiagram& d);

/// Block-diagonal 2k x 2k linking matrix, block i = [[f_i, 1], [1, 0]].
/// Throws PreconditionError if the diagram is not normalized.
IntegerMatrix linking_matrix(const NormalFormDiagram& d);

/// Signature of the intersection form.  Every handle pair contributes a
/// determinant -1 block, so the value is 0 for every valid diagram; the
/// computation is carried out regardless of framing normalization so
/// the law is checkable across raw intermediate states.
int signature(const NormalFormDiagram& d);

NormalOneTypeData normal_one_type(const NormalFormDiagram& d);

/// Canonical representative under attaching-circle isotopy, orientation
/// reversal and handle reordering: each word is replaced by the least
/// rotation of its cyclic reduction or of the inverse, and the pairs are
/// sorted by (word, framing).  Idempotent.
NormalFormDiagram canonicalize(const NormalFormDiagram& d);

}  // namespace kirby

#endif  // KIRBY_DIAGRAM_HPP
