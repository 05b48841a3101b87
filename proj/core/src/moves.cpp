#include "kirby/moves.hpp"

#include <cstdlib>
#include <span>
#include <string>

#include "kirby/errors.hpp"

namespace kirby {

namespace {

void require_handle(const NormalFormDiagram& d, int idx,
                    const std::string& role) {
  if (idx < 0 || idx >= static_cast<int>(d.handles.size())) {
    throw RejectedMoveError(role + " handle index " + std::to_string(idx + 1) +
                            " out of range");
  }
}

void require_generator(const NormalFormDiagram& d, int gen) {
  if (gen < 1 || gen > d.num_one_handles) {
    throw RejectedMoveError("1-handle index " + std::to_string(gen) +
                            " out of range");
  }
}

void require_word(const NormalFormDiagram& d, const Word& w) {
  if (w.max_index() > d.num_one_handles) {
    throw RejectedMoveError("word uses a 1-handle beyond the diagram");
  }
}

NormalFormDiagram apply(const NormalFormDiagram& d, const RelatorMultiply& m) {
  if (m.i == m.j) {
    throw RejectedMoveError("slide requires two distinct handle pairs");
  }
  require_handle(d, m.i, "slid");
  require_handle(d, m.j, "target");
  if (m.sign != 1 && m.sign != -1) {
    throw RejectedMoveError("slide sign must be +1 or -1");
  }
  require_word(d, m.w);
  NormalFormDiagram out = d;
  const Word& rj = d.handles[m.j].word;
  const Word s = m.sign > 0 ? rj : rj.inverse();
  out.handles[m.i].word =
      d.handles[m.i].word * m.w.inverse() * s * m.w;
  out.handles[m.i].framing =
      (((d.handles[m.i].framing + d.handles[m.j].framing) % 2) + 2) % 2;
  return out;
}

NormalFormDiagram apply(const NormalFormDiagram& d,
                        const MeridianFrameSlide& m) {
  require_handle(d, m.i, "slid");
  if (m.delta != 2 && m.delta != -2) {
    throw RejectedMoveError("meridian slide changes framing by exactly +-2");
  }
  NormalFormDiagram out = d;
  out.handles[m.i].framing += m.delta;
  return out;
}

NormalFormDiagram apply(const NormalFormDiagram& d, const HandleTwist& m) {
  require_generator(d, m.gen);
  NormalFormDiagram out = d;
  for (HandlePair& h : out.handles) {
    const int strands = static_cast<int>(h.word.occurrences(m.gen)) % 2;
    if (strands) {
      h.framing = (((h.framing + 1) % 2) + 2) % 2;
    }
  }
  return out;
}

NormalFormDiagram apply(const NormalFormDiagram& d, const Isotopy& m) {
  require_handle(d, m.i, "isotoped");
  require_word(d, m.conjugator);
  NormalFormDiagram out = d;
  Word moved = out.handles[m.i].word.conjugated_by(m.conjugator);
  out.handles[m.i].word = m.invert ? moved.inverse() : moved;
  return out;
}

NormalFormDiagram apply(const NormalFormDiagram& d, const AddGenerator& m) {
  require_word(d, m.x);
  NormalFormDiagram out = d;
  out.num_one_handles = d.num_one_handles + 1;
  out.handles.push_back(
      {Word::reduce({out.num_one_handles}) * m.x.inverse(), 0});
  return out;
}

NormalFormDiagram apply(const NormalFormDiagram& d, const CancelPair& m) {
  require_generator(d, m.gen);
  require_handle(d, m.rel, "cancelled");
  if (d.handles[m.rel].framing != 0) {
    throw RejectedMoveError(
        "cancelled handle must have framing 0 (twist it first)");
  }
  const auto solution = eliminable_solution(d.handles[m.rel].word, m.gen);
  if (!solution) {
    throw RejectedMoveError(
        "handle word must meet the cancelled 1-handle exactly once");
  }
  NormalFormDiagram out;
  out.num_one_handles = d.num_one_handles - 1;
  out.handles.reserve(d.handles.size() - 1);
  for (int i = 0; i < static_cast<int>(d.handles.size()); ++i) {
    if (i == m.rel) continue;
    out.handles.push_back({d.handles[i]
                               .word.substituted(m.gen, *solution)
                               .shifted_down_past(m.gen),
                           d.handles[i].framing});
  }
  return out;
}

NormalFormDiagram apply(const NormalFormDiagram& d, const Stabilize&) {
  NormalFormDiagram out = d;
  out.handles.push_back({Word(), 0});
  return out;
}

NormalFormDiagram apply(const NormalFormDiagram& d, const Destabilize& m) {
  require_handle(d, m.rel, "destabilized");
  if (!d.handles[m.rel].word.empty() || d.handles[m.rel].framing != 0) {
    throw RejectedMoveError(
        "destabilization requires an (empty word, 0-framed) handle pair");
  }
  NormalFormDiagram out = d;
  out.handles.erase(out.handles.begin() + m.rel);
  return out;
}

}  // namespace

NormalFormDiagram apply_move(const NormalFormDiagram& d, const Move& m) {
  return std::visit([&](const auto& concrete) { return apply(d, concrete); },
                    m);
}

ReplayResult replay(const NormalFormDiagram& d, const MoveCertificate& cert,
                    const NormalFormDiagram& target) {
  NormalFormDiagram left = d;
  for (int s = 0; s < cert.left_stabilizations; ++s) {
    left = apply_move(left, Stabilize{});
  }
  NormalFormDiagram right = target;
  for (int s = 0; s < cert.right_stabilizations; ++s) {
    right = apply_move(right, Stabilize{});
  }
  for (std::size_t i = 0; i < cert.moves.size(); ++i) {
    try {
      left = apply_move(left, cert.moves[i]);
    } catch (const RejectedMoveError& e) {
      return {false,
              "move " + std::to_string(i + 1) + " rejected: " + e.what(), i};
    }
  }
  if (canonicalize(left) == canonicalize(right)) {
    return {true, "diagrams agree after replay", std::nullopt};
  }
  return {false, "diagrams differ after replay", std::nullopt};
}

std::pair<NormalFormDiagram, MoveCertificate> geometric_t1(
    const NormalFormDiagram& d, const Word& x) {
  MoveCertificate cert;
  cert.moves.push_back(AddGenerator{x});
  return {apply_move(d, cert.moves.back()), std::move(cert)};
}

std::pair<NormalFormDiagram, MoveCertificate> geometric_t1_inverse_at(
    const NormalFormDiagram& d, int gen, int rel) {
  require_generator(d, gen);
  require_handle(d, rel, "cancelled");
  if (!eliminable_solution(d.handles[rel].word, gen)) {
    throw RejectedMoveError(
        "handle word must meet the cancelled 1-handle exactly once");
  }
  MoveCertificate cert;
  NormalFormDiagram cur = d;
  if ((((cur.handles[rel].framing % 2) + 2) % 2) != 0) {
    // The single strand through gen makes the twist flip this framing.
    cert.moves.push_back(HandleTwist{gen});
    cur = apply_move(cur, cert.moves.back());
  }
  // Rotate the attaching circle so it enters the 1-handle first: with
  // word = conj * core * conj^-1 and core = u * g^e * v, conjugating by
  // (conj * u)^-1 yields g^e * v * u.
  {
    const auto [core, conj] = cur.handles[rel].word.cyclic_reduce();
    const auto& letters = core.letters();
    std::size_t pos = 0;
    while (pos < letters.size() && std::abs(letters[pos]) != gen) ++pos;
    Word u = Word::reduce(std::span<const int>(letters.data(), pos));
    Word rotation = (conj * u).inverse();
    if (!rotation.empty()) {
      cert.moves.push_back(Isotopy{rel, rotation, false});
      cur = apply_move(cur, cert.moves.back());
    }
  }
  cert.moves.push_back(CancelPair{gen, rel});
  cur = apply_move(cur, cert.moves.back());
  return {std::move(cur), std::move(cert)};
}

std::pair<NormalFormDiagram, MoveCertificate> geometric_t1_inverse(
    const NormalFormDiagram& d, int gen) {
  require_generator(d, gen);
  for (int rel = 0; rel < static_cast<int>(d.handles.size()); ++rel) {
    if (eliminable_solution(d.handles[rel].word, gen)) {
      return geometric_t1_inverse_at(d, gen, rel);
    }
  }
  throw RejectedMoveError("no handle word meets 1-handle " +
                          std::to_string(gen) + " exactly once");
}

std::pair<NormalFormDiagram, MoveCertificate> geometric_s1(
    const NormalFormDiagram& d, int i, int j, int sign, const Word& w) {
  MoveCertificate cert;
  cert.moves.push_back(RelatorMultiply{i, j, sign, w});
  return {apply_move(d, cert.moves.back()), std::move(cert)};
}

std::pair<NormalFormDiagram, MoveCertificate> geometric_s2(
    const NormalFormDiagram& d) {
  MoveCertificate cert;
  cert.left_stabilizations = 1;
  return {apply_move(d, Stabilize{}), std::move(cert)};
}

std::pair<NormalFormDiagram, MoveCertificate> geometric_s2_inverse(
    const NormalFormDiagram& d) {
  for (int rel = 0; rel < static_cast<int>(d.handles.size()); ++rel) {
    if (d.handles[rel].word.empty() && d.handles[rel].framing == 0) {
      MoveCertificate cert;
      cert.right_stabilizations = 1;
      return {apply_move(d, Destabilize{rel}), std::move(cert)};
    }
  }
  throw RejectedMoveError("no (empty word, 0-framed) handle pair to remove");
}

}  // namespace kirby
