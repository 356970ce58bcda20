#pragma once

// Pisot classification, the balanced pair algorithm and strong coincidence.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "subst/polynomial.hpp"
#include "subst/roots.hpp"
#include "subst/word.hpp"

namespace subst {

enum class PisotReason {
  NotPrimitive,
  Periodic,
  UnitCircleRoot,     // a conjugate of lambda_PF has modulus exactly one
  ConjugateOutside,   // a conjugate of lambda_PF has modulus above one
  ZeroEigenvalue,     // Pisot, char poly reducible because of a zero root
  Reducible,          // Pisot, char poly reducible otherwise
  IrreduciblePisot,
  UndecidedExact,     // factorization beyond the degree cap
};
std::string to_string(PisotReason r);

struct PisotVerdict {
  bool primitive = false;
  bool aperiodic = false;
  bool decided = true;
  IntPolynomial char_poly;
  IntPolynomial minimal_polynomial;  // of lambda_PF
  bool char_poly_irreducible = false;
  bool pisot = false;
  bool irreducible_pisot = false;
  PisotReason reason = PisotReason::NotPrimitive;
};

PisotVerdict classify_pisot(const Substitution& phi, int max_degree = kDefaultMaxFactorDegree);

// Search filter: primitive, irreducible char poly, all other roots strictly
// inside the unit disc. Skips everything classify_pisot records besides.
bool is_irreducible_pisot(const Substitution& phi);

struct BalancedPair {
  Word u, v;
  bool coincidence() const { return u.size() == 1 && u == v; }
  friend bool operator==(const BalancedPair&, const BalancedPair&) = default;
  friend auto operator<=>(const BalancedPair&, const BalancedPair&) = default;
};
std::string to_string(const BalancedPair& p);  // (u,v)

// Splits at every prefix where the abelianizations agree.
// Throws ContractViolation on an unbalanced pair.
std::vector<BalancedPair> factor_balanced_pair(const BalancedPair& bp);

inline constexpr std::size_t kBalancedPairLimit = 4096;
inline constexpr std::size_t kBalancedPairSideLimit = 100'000;

struct BalancedPairResult {
  std::optional<bool> terminates;  // nullopt: budget reached first
  bool coincidence = false;
  std::vector<BalancedPair> pairs;  // I(u,v), sorted
};

BalancedPairResult balanced_pair_algorithm(const Substitution& phi, const Word& u, const Word& v,
                                           std::size_t pair_limit = kBalancedPairLimit,
                                           std::size_t side_limit = kBalancedPairSideLimit);

// Terminates with coincidence on (01,10). Needs an irreducible Pisot input.
std::optional<bool> pure_discrete_spectrum(const Substitution& phi,
                                           std::size_t pair_limit = kBalancedPairLimit,
                                           std::size_t side_limit = kBalancedPairSideLimit);

inline constexpr int kDefaultCoincidenceCap = 30;

// phi^n(i) = u k v, phi^n(j) = u' k v' with equal abelianizations of u, u'.
// Such prefixes have equal length, so the witness is a single position.
struct CoincidenceWitness {
  int n = 0;
  std::size_t position = 0;
  Letter letter = 0;
  std::vector<std::int64_t> prefix;  // abelianization of u
};

struct PairCoincidence {
  Letter i = 0, j = 0;
  std::optional<CoincidenceWitness> witness;
};

struct CoincidenceReport {
  std::vector<PairCoincidence> pairs;  // i < j, lexicographic
  bool strongly_coincident = false;
  int iteration = 0;  // max over pairs of the first n; 0 if not coincident
  int cap = kDefaultCoincidenceCap;
  bool budget_exceeded = false;  // a scan passed `budget` positions
};

// Images are streamed, so `budget` bounds the positions scanned per pair and
// iteration rather than the word length. Refuses non-primitive input.
CoincidenceReport strong_coincidence(const Substitution& phi, int cap = kDefaultCoincidenceCap,
                                     std::size_t budget = kDefaultWordBudget);

}  // namespace subst
