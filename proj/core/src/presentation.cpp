#include "kirby/presentation.hpp"

#include <cstdlib>
#include <string>

#include "kirby/errors.hpp"

namespace kirby {

void check_presentation(const Presentation& p) {
  if (p.num_generators < 0) {
    throw MalformedInputError("negative generator count");
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (p.relators[i].max_index() > p.num_generators) {
      throw MalformedInputError("relator " + std::to_string(i + 1) +
                                " uses a generator index beyond " +
                                std::to_string(p.num_generators));
    }
  }
}

Presentation tietze_t1(const Presentation& p, const Word& x) {
  if (x.max_index() > p.num_generators) {
    throw MalformedInputError("defining word uses an unknown generator");
  }
  Presentation out = p;
  out.num_generators = p.num_generators + 1;
  out.relators.push_back(Word::reduce({out.num_generators}) * x.inverse());
  return out;
}

std::optional<Word> eliminable_solution(const Word& relator, int gen) {
  const Word core = relator.cyclic_reduce().first;
  if (core.occurrences(gen) != 1) return std::nullopt;
  const auto& letters = core.letters();
  std::size_t pos = 0;
  while (std::abs(letters[pos]) != gen) ++pos;
  // core = pre . g^e . post; the relation core = 1 solves to
  // g = (post . pre)^-1 when e = +1 and g = post . pre when e = -1.
  std::vector<int> rest(letters.begin() + pos + 1, letters.end());
  rest.insert(rest.end(), letters.begin(), letters.begin() + pos);
  Word tail = Word::reduce(rest);
  return letters[pos] > 0 ? tail.inverse() : tail;
}

Presentation tietze_t1_inverse(const Presentation& p, int gen, int rel) {
  if (gen < 1 || gen > p.num_generators) {
    throw PreconditionError("generator index out of range");
  }
  if (rel < 0 || rel >= static_cast<int>(p.relators.size())) {
    throw PreconditionError("relator index out of range");
  }
  const auto solution = eliminable_solution(p.relators[rel], gen);
  if (!solution) {
    throw PreconditionError(
        "relator does not contain the generator exactly once");
  }
  Presentation out;
  out.num_generators = p.num_generators - 1;
  out.relators.reserve(p.relators.size() - 1);
  for (int i = 0; i < static_cast<int>(p.relators.size()); ++i) {
    if (i == rel) continue;
    out.relators.push_back(
        p.relators[i].substituted(gen, *solution).shifted_down_past(gen));
  }
  return out;
}

Presentation tietze_s1(const Presentation& p, int i, int j, int sign,
                       const Word& w) {
  if (i == j) {
    throw PreconditionError("S1 requires two distinct relator positions");
  }
  const int k = static_cast<int>(p.relators.size());
  if (i < 0 || i >= k || j < 0 || j >= k) {
    throw PreconditionError("relator index out of range");
  }
  if (sign != 1 && sign != -1) {
    throw PreconditionError("sign must be +1 or -1");
  }
  if (w.max_index() > p.num_generators) {
    throw MalformedInputError("conjugating word uses an unknown generator");
  }
  const Word s = sign > 0 ? p.relators[j] : p.relators[j].inverse();
  Presentation out = p;
  out.relators[i] = p.relators[i] * w.inverse() * s * w;
  return out;
}

Presentation tietze_s2_add(const Presentation& p) {
  Presentation out = p;
  out.relators.emplace_back();
  return out;
}

Presentation tietze_s2_delete(const Presentation& p, int rel) {
  if (rel < 0 || rel >= static_cast<int>(p.relators.size())) {
    throw PreconditionError("relator index out of range");
  }
  if (!p.relators[rel].empty()) {
    throw PreconditionError("S2' may only delete an empty relator");
  }
  Presentation out = p;
  out.relators.erase(out.relators.begin() + rel);
  return out;
}

}  // namespace kirby
