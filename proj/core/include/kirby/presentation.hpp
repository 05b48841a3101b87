#ifndef KIRBY_PRESENTATION_HPP
#define KIRBY_PRESENTATION_HPP

#include <optional>
#include <vector>

#include "kirby/word.hpp"

namespace kirby {

/// A finite group presentation: a generator count and a relator list.
/// Relators are freely reduced words over generators 1..num_generators;
/// the empty relator is allowed.  Relator positions are 0-based
/// throughout the API (file formats render them 1-based).
struct Presentation {
  int num_generators = 0;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

/// Throws MalformedInputError unless every relator index fits the
/// generator count.
void check_presentation(const Presentation& p);

/// T1: adjoins a new generator y (index n+1) and the relator y * x^-1.
Presentation tietze_t1(const Presentation& p, const Word& x);

/// T1': eliminates generator `gen` (a letter value in 1..n) using the
/// relator at position `rel`.  The relator, after cyclic reduction, must
/// contain gen exactly once; solving it gives gen = X with X free of
/// gen.  X is substituted in every other relator, the relator and the
/// generator are removed, higher generator indices shift down, and all
/// words are re-reduced.  Throws PreconditionError otherwise.
Presentation tietze_t1_inverse(const Presentation& p, int gen, int rel);

/// S1: replaces relator i by free_reduce(r_i * w^-1 * s * w) where s is
/// relator j (sign=+1) or its inverse (sign=-1).  Requires i != j.
Presentation tietze_s1(const Presentation& p, int i, int j, int sign,
                       const Word& w);

/// S2: appends the empty relator.
Presentation tietze_s2_add(const Presentation& p);

/// S2': deletes the relator at `rel`, which must be the empty word.
Presentation tietze_s2_delete(const Presentation& p, int rel);

/// If the relator's cyclic core contains generator `gen` exactly once,
/// returns the word X with gen = X (X free of gen); otherwise nullopt.
/// This is the shared eliminability test behind T1' and handle
/// cancellation.
std::optional<Word> eliminable_solution(const Word& relator, int gen);

}  // namespace kirby

#endif  // KIRBY_PRESENTATION_HPP
