#ifndef KIRBY_WORD_HPP
#define KIRBY_WORD_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kirby {

/// A freely reduced word over a generator alphabet with formal inverses.
///
/// A letter is a nonzero int: +g stands for generator g, -g for its
/// inverse, with generators numbered 1..n.  A Word never stores an
/// adjacent (+g,-g) or (-g,+g) pair; reduction happens at construction
/// and every operation returns reduced results.  Words carry no ambient
/// generator count; callers validate indices against their context with
/// max_index().
class Word {
 public:
  /// The empty word.
  Word() = default;

  /// Reduces an arbitrary letter sequence to its free normal form.
  /// Throws MalformedInputError if a letter is zero.
  static Word reduce(std::span<const int> letters);
  static Word reduce(std::initializer_list<int> letters);

  /// Parses a compact string form: 'a'..'z' are generators 1..26,
  /// 'A'..'Z' their inverses; "" is the empty word.  The result is
  /// freely reduced.  Throws MalformedInputError on other characters.
  static Word parse(std::string_view text);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Largest generator index appearing in the word (0 if empty).
  int max_index() const;

  Word inverse() const;

  /// Concatenation followed by free reduction.
  friend Word operator*(const Word& lhs, const Word& rhs);

  /// u * w * u^-1, reduced.
  Word conjugated_by(const Word& u) const;

  /// Splits the word as conjugator * core * conjugator^-1 with the core
  /// cyclically reduced.  Returns (core, conjugator).
  std::pair<Word, Word> cyclic_reduce() const;

  bool is_cyclically_reduced() const;

  /// Signed exponent sum of generator g.
  int exponent_sum(int gen) const;

  /// Number of letters equal to +g or -g.
  std::size_t occurrences(int gen) const;

  /// Replaces every +g by `replacement` and every -g by its inverse,
  /// then reduces.  `replacement` must not mention g.
  Word substituted(int gen, const Word& replacement) const;

  /// Shifts every index strictly greater than gen down by one.  The word
  /// must not contain +/-gen.  Used when a generator is eliminated.
  Word shifted_down_past(int gen) const;

  /// Lexicographically least word among all cyclic rotations of the
  /// cyclic core and of its inverse.  This is the representative used
  /// for attaching-circle comparisons: rotation corresponds to isotopy
  /// of the circle, inversion to orientation reversal.
  Word canonical_cyclic() const;

  /// Letter order: a < A < b < B < ...  Word order is lexicographic on
  /// letter keys (a proper prefix precedes its extensions).
  static int letter_key(int letter);
  bool lex_less(const Word& other) const;

  bool operator==(const Word&) const = default;

  /// Compact string form, inverse of parse(); valid for indices <= 26.
  std::string str() const;

 private:
  std::vector<int> letters_;
};

}  // namespace kirby

#endif  // KIRBY_WORD_HPP
