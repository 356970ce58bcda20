#pragma once

// Admitted words and the complexity function.

#include <vector>

#include "subst/word.hpp"

namespace subst {

// Sorted, duplicate-free words of a common length.
using WordSet = std::vector<Word>;

// L^n: closure of the factors of a seed phi^k(0) under "factors of phi(u)".
// Refuses non-primitive substitutions.
WordSet admitted_words(const Substitution& phi, std::size_t n, std::size_t budget = kDefaultWordBudget);

// p(1), ..., p(n_max).
std::vector<std::size_t> complexity(const Substitution& phi, std::size_t n_max,
                                    std::size_t budget = kDefaultWordBudget);

// Morse-Hedlund: p(n) <= n for some n means an eventually periodic language.
bool complexity_indicates_periodic(const std::vector<std::size_t>& p);

bool contains(const WordSet& set, const Word& w);

}  // namespace subst
