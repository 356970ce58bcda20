#pragma once

// Properization through return words.

#include <string>

#include "subst/recognizability.hpp"
#include "subst/word.hpp"

namespace subst {

inline constexpr int kDefaultProperizationCap = 64;

struct PreLeftProperization {
  ReturnWords returns;  // the new alphabet, label i = returns.words[i]
  Substitution eta;     // eta(i) = labels of phi^k(returns.words[i])
};

// Refuses non-primitive input.
PreLeftProperization pre_left_properize(const Substitution& phi, std::size_t budget = kDefaultWordBudget);

struct LeftProperization {
  int n = 1;  // minimal n with eta^n left-proper
  Substitution power;
};

LeftProperization left_properize(const Substitution& eta, int cap = kDefaultProperizationCap,
                                 std::size_t budget = kDefaultWordBudget);

// phi(b) = a w_b becomes w_b a. Needs a left-proper input.
Substitution right_conjugate(const Substitution& phi);

struct Properization {
  PreLeftProperization pre;
  LeftProperization left;
  Substitution right;  // (eta^n)^(R)
  Substitution full;   // eta^n o (eta^n)^(R)
};

Properization full_properize(const Substitution& phi, int cap = kDefaultProperizationCap,
                             std::size_t budget = kDefaultWordBudget);

// "[w]" labels of the return-word alphabet, e.g. "[0],[01],[011]".
std::string render_return_alphabet(const ReturnWords& r);

}  // namespace subst
