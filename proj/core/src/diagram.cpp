#include "kirby/diagram.hpp"

#include <algorithm>

#include "kirby/errors.hpp"
#include "kirby/homology.hpp"

namespace kirby {

Presentation NormalFormDiagram::presentation() const {
  Presentation p;
  p.num_generators = num_one_handles;
  p.relators.reserve(handles.size());
  for (const HandlePair& h : handles) p.relators.push_back(h.word);
  return p;
}

bool NormalFormDiagram::is_normalized() const {
  return std::all_of(handles.begin(), handles.end(), [](const HandlePair& h) {
    return h.framing == 0 || h.framing == 1;
  });
}

NormalFormDiagram from_presentation(const Presentation& p,
                                    const std::vector<int>& framings) {
  check_presentation(p);
  if (framings.size() != p.relators.size()) {
    throw MalformedInputError(
        "framing vector length must equal the relator count");
  }
  for (int f : framings) {
    if (f != 0 && f != 1) {
      throw MalformedInputError("framings must be 0 or 1");
    }
  }
  NormalFormDiagram d;
  d.num_one_handles = p.num_generators;
  d.handles.reserve(p.relators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    d.handles.push_back({p.relators[i], framings[i]});
  }
  return d;
}

std::vector<std::string> validate(const NormalFormDiagram& d) {
  std::vector<std::string> violations;
  if (d.num_one_handles < 0) {
    violations.push_back("negative 1-handle count");
  }
  for (std::size_t i = 0; i < d.handles.size(); ++i) {
    const HandlePair& h = d.handles[i];
    const std::string where = " at handle " + std::to_string(i + 1);
    if (h.word != Word::reduce(h.word.letters())) {
      violations.push_back("word not freely reduced" + where);
    }
    if (h.word.max_index() > d.num_one_handles) {
      violations.push_back("word index out of range" + where);
    }
    if (h.framing != 0 && h.framing != 1) {
      violations.push_back("framing out of {0,1}" + where);
    }
  }
  return violations;
}

int euler_characteristic(const NormalFormDiagram& d) {
  return 2 - 2 * d.num_one_handles + 2 * static_cast<int>(d.handles.size());
}

namespace {

IntegerMatrix linking_blocks(const NormalFormDiagram& d) {
  const std::size_t k = d.handles.size();
  IntegerMatrix m(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    m.at(2 * i, 2 * i) = d.handles[i].framing;
    m.at(2 * i, 2 * i + 1) = 1;
    m.at(2 * i + 1, 2 * i) = 1;
  }
  return m;
}

}  // namespace

IntegerMatrix linking_matrix(const NormalFormDiagram& d) {
  if (!d.is_normalized()) {
    throw PreconditionError(
        "linking matrix requires a normalized diagram (framings in {0,1})");
  }
  return linking_blocks(d);
}

int signature(const NormalFormDiagram& d) {
  return symmetric_signature(linking_blocks(d));
}

NormalOneTypeData normal_one_type(const NormalFormDiagram& d) {
  NormalOneTypeData t;
  t.presentation = d.presentation();
  t.w_class = F2Vector(d.handles.size());
  for (std::size_t i = 0; i < d.handles.size(); ++i) {
    t.w_class[i] =
        static_cast<std::uint8_t>(((d.handles[i].framing % 2) + 2) % 2);
  }
  t.spin = coboundary_witness(t.presentation, t.w_class).has_value();
  return t;
}

NormalFormDiagram canonicalize(const NormalFormDiagram& d) {
  NormalFormDiagram out;
  out.num_one_handles = d.num_one_handles;
  out.handles.reserve(d.handles.size());
  for (const HandlePair& h : d.handles) {
    out.handles.push_back({h.word.canonical_cyclic(), h.framing});
  }
  std::sort(out.handles.begin(), out.handles.end(),
            [](const HandlePair& a, const HandlePair& b) {
              if (a.word != b.word) return a.word.lex_less(b.word);
              return a.framing < b.framing;
            });
  return out;
}

}  // namespace kirby
