#include "kirby/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "kirby/errors.hpp"

namespace kirby {

Word Word::reduce(std::span<const int> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (int letter : letters) {
    if (letter == 0) {
      throw MalformedInputError("word letter must be a nonzero index");
    }
    if (!w.letters_.empty() && w.letters_.back() == -letter) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(letter);
    }
  }
  return w;
}

Word Word::reduce(std::initializer_list<int> letters) {
  return reduce(std::span<const int>(letters.begin(), letters.size()));
}

Word Word::parse(std::string_view text) {
  std::vector<int> raw;
  raw.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      raw.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      raw.push_back(-(c - 'A' + 1));
    } else {
      throw MalformedInputError(std::string("invalid word character '") + c +
                                "'");
    }
  }
  return reduce(raw);
}

int Word::max_index() const {
  int m = 0;
  for (int letter : letters_) m = std::max(m, std::abs(letter));
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(-*it);
  }
  return w;
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<int> raw = lhs.letters_;
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word::reduce(raw);
}

Word Word::conjugated_by(const Word& u) const {
  return u * (*this) * u.inverse();
}

std::pair<Word, Word> Word::cyclic_reduce() const {
  std::vector<int> core = letters_;
  std::vector<int> conj;
  while (core.size() >= 2 && core.front() == -core.back()) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  Word core_w;
  core_w.letters_ = std::move(core);
  Word conj_w;
  conj_w.letters_ = std::move(conj);
  return {core_w, conj_w};
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != -letters_.back();
}

int Word::exponent_sum(int gen) const {
  int sum = 0;
  for (int letter : letters_) {
    if (letter == gen) ++sum;
    if (letter == -gen) --sum;
  }
  return sum;
}

std::size_t Word::occurrences(int gen) const {
  std::size_t count = 0;
  for (int letter : letters_) {
    if (std::abs(letter) == gen) ++count;
  }
  return count;
}

Word Word::substituted(int gen, const Word& replacement) const {
  std::vector<int> raw;
  raw.reserve(letters_.size() * (replacement.size() + 1));
  const Word inv = replacement.inverse();
  for (int letter : letters_) {
    if (letter == gen) {
      raw.insert(raw.end(), replacement.letters_.begin(),
                 replacement.letters_.end());
    } else if (letter == -gen) {
      raw.insert(raw.end(), inv.letters_.begin(), inv.letters_.end());
    } else {
      raw.push_back(letter);
    }
  }
  return reduce(raw);
}

Word Word::shifted_down_past(int gen) const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (int letter : letters_) {
    int idx = std::abs(letter);
    if (idx == gen) {
      throw PreconditionError("cannot reindex a word that still mentions the "
                              "eliminated generator");
    }
    w.letters_.push_back(idx > gen ? (letter > 0 ? letter - 1 : letter + 1)
                                   : letter);
  }
  return w;
}

int Word::letter_key(int letter) {
  return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
}

bool Word::lex_less(const Word& other) const {
  return std::lexicographical_compare(
      letters_.begin(), letters_.end(), other.letters_.begin(),
      other.letters_.end(),
      [](int a, int b) { return letter_key(a) < letter_key(b); });
}

Word Word::canonical_cyclic() const {
  Word core = cyclic_reduce().first;
  if (core.empty()) return core;
  Word best = core;
  for (const Word& base : {core, core.inverse()}) {
    std::vector<int> doubled = base.letters_;
    doubled.insert(doubled.end(), base.letters_.begin(), base.letters_.end());
    for (std::size_t start = 0; start < base.size(); ++start) {
      Word rot;
      rot.letters_.assign(doubled.begin() + start,
                          doubled.begin() + start + base.size());
      if (rot.lex_less(best)) best = rot;
    }
  }
  return best;
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (int letter : letters_) {
    int idx = std::abs(letter);
    if (idx > 26) {
      throw MalformedInputError(
          "word has a generator index beyond the 26-letter alphabet");
    }
    out.push_back(letter > 0 ? static_cast<char>('a' + idx - 1)
                             : static_cast<char>('A' + idx - 1));
  }
  return out;
}

}  // namespace kirby
