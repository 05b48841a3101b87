#ifndef KIRBY_MOVES_HPP
#define KIRBY_MOVES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kirby/diagram.hpp"

namespace kirby {

/// Handle slide of circle i over circle j (and over meridians to keep
/// the normal form): word_i <- free_reduce(word_i * w^-1 * word_j^sign * w),
/// framing_i <- (framing_i + framing_j) mod 2.  Requires i != j.
struct RelatorMultiply {
  int i = 0;
  int j = 0;
  int sign = 1;
  Word w;
  bool operator==(const RelatorMultiply&) const = default;
};

/// Slide of handle i over its own 0-framed meridian: framing_i += delta
/// with delta in {+2, -2}.  The move that trades even framing
/// differences away; it is the one move whose output may leave {0,1}.
struct MeridianFrameSlide {
  int i = 0;
  int delta = 2;
  bool operator==(const MeridianFrameSlide&) const = default;
};

/// Full twist on 1-handle g: every handle word picks up framing change
/// equal to its strand count through g mod 2 (= exponent sum mod 2),
/// renormalized into {0,1} by implicit meridian slides.
struct HandleTwist {
  int gen = 0;
  bool operator==(const HandleTwist&) const = default;
};

/// Attaching-circle isotopy: word_i <- free_reduce(w * word_i * w^-1),
/// optionally followed by orientation reversal.  Framing unchanged.
struct Isotopy {
  int i = 0;
  Word conjugator;
  bool invert = false;
  bool operator==(const Isotopy&) const = default;
};

/// Adds a 1-handle y (index n+1) and the 2-handle pair (y * x^-1, 0).
struct AddGenerator {
  Word x;
  bool operator==(const AddGenerator&) const = default;
};

/// Cancels 1-handle `gen` against 2-handle pair `rel`.  Requires the
/// relator to contain gen exactly once up to cyclic reduction and the
/// framing of `rel` to be 0; the solved word is substituted in every
/// other handle word and indices above gen shift down.
struct CancelPair {
  int gen = 0;
  int rel = 0;
  bool operator==(const CancelPair&) const = default;
};

/// Connected sum with S^2 x S^2: appends the pair (empty word, 0).
struct Stabilize {
  bool operator==(const Stabilize&) const = default;
};

/// Removes handle pair `rel`, which must be (empty word, 0).
struct Destabilize {
  int rel = 0;
  bool operator==(const Destabilize&) const = default;
};

using Move = std::variant<RelatorMultiply, MeridianFrameSlide, HandleTwist,
                          Isotopy, AddGenerator, CancelPair, Stabilize,
                          Destabilize>;

/// A replayable witness of a (stable) diffeomorphism: stabilization
/// counts for each side followed by the elementary moves applied to the
/// stabilized left diagram.
struct MoveCertificate {
  std::vector<Move> moves;
  int left_stabilizations = 0;
  int right_stabilizations = 0;

  bool operator==(const MoveCertificate&) const = default;
};

/// Applies one move.  Throws RejectedMoveError naming the violated
/// clause when the move's preconditions fail.
NormalFormDiagram apply_move(const NormalFormDiagram& d, const Move& m);

struct ReplayResult {
  bool success = false;
  std::string message;
  /// 0-based index into cert.moves of the rejected move, when one fails.
  std::optional<std::size_t> failed_move;
};

/// Stabilizes d by cert.left_stabilizations and target by
/// cert.right_stabilizations, applies cert.moves to the stabilized d,
/// and reports success iff the two canonical forms agree.
ReplayResult replay(const NormalFormDiagram& d, const MoveCertificate& cert,
                    const NormalFormDiagram& target);

/// Geometric T1: adds the cancelling 1-handle/2-handle pair for the word
/// x.  The certificate replays from d to the result.
std::pair<NormalFormDiagram, MoveCertificate> geometric_t1(
    const NormalFormDiagram& d, const Word& x);

/// Geometric T1 inverse: finds the first handle whose cyclic core meets
/// 1-handle `gen` exactly once and cancels the pair, inserting a
/// HandleTwist first when the framing is 1 and an Isotopy when the
/// occurrence needs rotating to the front.  Throws RejectedMoveError
/// when no handle is eliminable.
std::pair<NormalFormDiagram, MoveCertificate> geometric_t1_inverse(
    const NormalFormDiagram& d, int gen);

/// Geometric T1 inverse at a specific handle.
std::pair<NormalFormDiagram, MoveCertificate> geometric_t1_inverse_at(
    const NormalFormDiagram& d, int gen, int rel);

/// Geometric S1: certificate-wrapped RelatorMultiply.
std::pair<NormalFormDiagram, MoveCertificate> geometric_s1(
    const NormalFormDiagram& d, int i, int j, int sign, const Word& w);

/// Geometric S2: connected sum with S^2 x S^2.  The certificate carries
/// the stabilization in its left count.
std::pair<NormalFormDiagram, MoveCertificate> geometric_s2(
    const NormalFormDiagram& d);

/// Inverse geometric S2: removes the first (empty, 0) pair; the
/// certificate records the lost summand in its right count.
std::pair<NormalFormDiagram, MoveCertificate> geometric_s2_inverse(
    const NormalFormDiagram& d);

}  // namespace kirby

#endif  // KIRBY_MOVES_HPP
