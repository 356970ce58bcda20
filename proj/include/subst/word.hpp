#pragma once

// Words over the canonical alphabet {0, ..., l-1} and substitutions on them.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "subst/scalar.hpp"

namespace subst {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t kMaxLetters = 256;
inline constexpr std::size_t kMaxGlyphLetters = 36;
inline constexpr std::size_t kDefaultWordBudget = 10'000'000;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w) h = (h ^ a) * 1099511628211ull;
    return h ^ w.size();
  }
};

// Length first, then lexicographic.
bool shortlex_less(const Word& a, const Word& b);

class Substitution {
 public:
  Substitution() = default;
  // Throws ParseError on an empty image or an out-of-range letter.
  explicit Substitution(std::vector<Word> images);

  std::size_t size() const { return images_.size(); }
  const Word& operator[](std::size_t letter) const { return images_[letter]; }
  const std::vector<Word>& images() const { return images_; }
  std::size_t total_length() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Word> images_;
};

// Share-string grammar: image ("," image)*, glyphs 0-9 then a-z.
Substitution parse_substitution(std::string_view text);
std::string serialize(const Substitution& phi);

Word parse_word(std::string_view text);
std::string to_string(const Word& w);
char glyph(Letter a);

Word apply(const Substitution& phi, const Word& w, std::size_t budget = kDefaultWordBudget);
Word iterate(const Substitution& phi, const Word& seed, int power, std::size_t budget = kDefaultWordBudget);

// (phi o eta)(a) = phi(eta(a)).
Substitution compose(const Substitution& phi, const Substitution& eta, std::size_t budget = kDefaultWordBudget);
Substitution power(const Substitution& phi, int n, std::size_t budget = kDefaultWordBudget);

IntVector abelianize(const Word& w, std::size_t alphabet_size);
// Same as abelianize, in machine integers.
std::vector<std::int64_t> letter_counts(const Word& w, std::size_t alphabet_size);

Substitution reverse_substitution(const Substitution& phi);
// Simultaneous relabelling: the image of perm[i] is perm applied to phi(i).
Substitution permute_letters(const Substitution& phi, const std::vector<Letter>& perm);
std::vector<Letter> inverse_permutation(const std::vector<Letter>& perm);

bool is_left_proper(const Substitution& phi);
bool is_right_proper(const Substitution& phi);
inline bool is_proper(const Substitution& phi) { return is_left_proper(phi) && is_right_proper(phi); }

}  // namespace subst
