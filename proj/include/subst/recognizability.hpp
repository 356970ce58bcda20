#pragma once

// Fixed letters, return words and the recognizability check.

#include <optional>
#include <vector>

#include "subst/word.hpp"

namespace subst {

struct FixedLetter {
  Letter letter = 0;
  int order = 1;  // minimal k with phi^k(letter) starting with letter
};

// Minimal order first, then smallest letter.
FixedLetter find_fixed_letter(const Substitution& phi);

struct ReturnWords {
  FixedLetter fixed;
  std::vector<Word> words;  // shortlex; position is the label

  std::optional<std::size_t> label_of(const Word& w) const;
};

ReturnWords return_words(const Substitution& phi, const FixedLetter& fixed, std::size_t budget = kDefaultWordBudget);
inline ReturnWords return_words(const Substitution& phi) { return return_words(phi, find_fixed_letter(phi)); }

// Splits w (which must start with the fixed letter) before every occurrence
// of it and labels the pieces. Throws ContractViolation on an unknown piece.
std::vector<std::size_t> factor_return_words(const ReturnWords& r, const Word& w);

struct ReturnPair {
  std::size_t first = 0, second = 0;  // labels, first < second
  Word forward;                       // phi^l(v v')
  Word backward;                      // phi^l(v' v)
  bool equal() const { return forward == backward; }
};

struct Recognizability {
  bool recognizable = false;
  ReturnWords returns;
  int power = 0;                     // l, the alphabet size
  std::vector<ReturnPair> pairs;     // all distinct pairs, in label order
  std::optional<std::size_t> witness;  // index into pairs of the first unequal pair
  // Some but not all distinct pairs have equal images.
  bool mixed = false;
};

// Not recognizable iff phi^l(v v') = phi^l(v' v) for all return words v, v'.
// Refuses non-primitive input.
Recognizability check_recognizability(const Substitution& phi, std::size_t budget = kDefaultWordBudget);
inline bool is_recognizable(const Substitution& phi) { return check_recognizability(phi).recognizable; }

}  // namespace subst
