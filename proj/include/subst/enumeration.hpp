#pragma once

// Substitutions on l letters in the search order: graded by total image
// length, then lexicographic on (phi(0), ..., phi(l-1)) comparing words
// shortlex, so (0,0,0) < (0,0,1) < (0,2,0) < (00,0,0).

#include <cstdint>
#include <vector>

#include "subst/word.hpp"

namespace subst {

bool search_order_less(const Substitution& a, const Substitution& b);

// Every substitution, canonical or not, starting from total length l.
class SubstitutionEnumerator {
 public:
  explicit SubstitutionEnumerator(std::size_t letters);
  const Substitution& current() const { return current_; }
  std::size_t total() const { return total_; }
  void next();

 private:
  void reset_after(std::size_t k, std::size_t remaining);
  std::size_t letters_;
  std::size_t total_;
  std::vector<Word> images_;
  Substitution current_;
};

// l^T * C(T-1, l-1) substitutions of total length T.
std::uint64_t substitutions_of_total(std::size_t letters, std::size_t total);

// Minimal in its orbit under letter permutations and image reversal.
bool is_canonical(const Substitution& phi);
// Orbit minimum by explicit generation of all 2 * l! elements.
Substitution canonical_form(const Substitution& phi);

// Canonical substitutions with canonical index in [start, start + count).
std::vector<Substitution> enumerate_substitutions(std::size_t letters, std::uint64_t start, std::uint64_t count);

}  // namespace subst
