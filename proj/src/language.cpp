#include "subst/language.hpp"

#include <algorithm>
#include <unordered_set>

#include "subst/error.hpp"
#include "subst/matrix.hpp"

namespace subst {

namespace {

void add_factors(const Word& w, std::size_t n, std::unordered_set<Word, WordHash>& into, std::vector<Word>* fresh) {
  if (w.size() < n) return;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    Word f(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + n));
    if (into.insert(f).second && fresh) fresh->push_back(std::move(f));
  }
}

}  // namespace

WordSet admitted_words(const Substitution& phi, std::size_t n, std::size_t budget) {
  if (n == 0) throw ContractViolation("admitted words need length at least 1");
  if (!is_primitive(phi).primitive) throw Refused("admitted-word enumeration needs a primitive substitution");
  // Under primitivity only 0 -> 0 fails to grow.
  const bool grows = phi.total_length() > phi.size();
  Word seed{0};
  while (grows && seed.size() < n) seed = apply(phi, seed, budget);
  std::unordered_set<Word, WordHash> set;
  std::vector<Word> frontier;
  add_factors(seed, n, set, &frontier);
  while (!frontier.empty()) {
    std::vector<Word> fresh;
    for (const Word& u : frontier) add_factors(apply(phi, u, budget), n, set, &fresh);
    frontier = std::move(fresh);
  }
  WordSet out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<std::size_t> complexity(const Substitution& phi, std::size_t n_max, std::size_t budget) {
  std::vector<std::size_t> p;
  for (std::size_t n = 1; n <= n_max; ++n) p.push_back(admitted_words(phi, n, budget).size());
  return p;
}

bool complexity_indicates_periodic(const std::vector<std::size_t>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] <= i + 1) return true;
  return false;
}

bool contains(const WordSet& set, const Word& w) { return std::binary_search(set.begin(), set.end(), w, shortlex_less); }

}  // namespace subst
