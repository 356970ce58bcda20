#include "subst/recognizability.hpp"

#include <algorithm>
#include <set>

#include "subst/error.hpp"
#include "subst/matrix.hpp"

namespace subst {

FixedLetter find_fixed_letter(const Substitution& phi) {
  const std::size_t l = phi.size();
  // f(a) = first letter of phi(a); a is fixed of order k iff f^k(a) = a.
  std::optional<FixedLetter> best;
  for (std::size_t a = 0; a < l; ++a) {
    Letter x = static_cast<Letter>(a);
    for (int k = 1; k <= static_cast<int>(l); ++k) {
      x = phi[x].front();
      if (x == a) {
        if (!best || k < best->order) best = FixedLetter{static_cast<Letter>(a), k};
        break;
      }
    }
  }
  if (!best) throw ContractViolation("substitution without a fixed letter");
  return *best;
}

std::optional<std::size_t> ReturnWords::label_of(const Word& w) const {
  const auto it = std::lower_bound(words.begin(), words.end(), w, shortlex_less);
  if (it == words.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words.begin());
}

namespace {

// Complete pieces of w between consecutive occurrences of a; with
// `include_tail`, the final piece too.
std::vector<Word> split_at(const Word& w, Letter a, bool include_tail) {
  std::vector<Word> pieces;
  std::size_t start = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != a) continue;
    if (start < i) pieces.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(i));
    start = i;
  }
  if (include_tail && start < w.size()) pieces.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
  return pieces;
}

}  // namespace

ReturnWords return_words(const Substitution& phi, const FixedLetter& fixed, std::size_t budget) {
  const Letter a = fixed.letter;
  const Substitution psi = power(phi, fixed.order, budget);
  // A prefix of the fixed point of psi holding at least two occurrences of a.
  Word prefix{a};
  while (std::count(prefix.begin(), prefix.end(), a) < 2) {
    Word next = apply(psi, prefix, budget);
    if (next.size() == prefix.size()) return {fixed, {}};
    prefix = std::move(next);
  }
  // The fixed point is psi of itself, so closing under "split psi(v)" reaches
  // every return word; psi(v) splits completely because psi(a) starts with a.
  std::set<Word, decltype(&shortlex_less)> found(&shortlex_less);
  std::vector<Word> frontier;
  for (Word& v : split_at(prefix, a, false))
    if (found.insert(v).second) frontier.push_back(std::move(v));
  while (!frontier.empty()) {
    std::vector<Word> fresh;
    for (const Word& v : frontier)
      for (Word& piece : split_at(apply(psi, v, budget), a, true))
        if (found.insert(piece).second) fresh.push_back(std::move(piece));
    frontier = std::move(fresh);
  }
  return {fixed, std::vector<Word>(found.begin(), found.end())};
}

std::vector<std::size_t> factor_return_words(const ReturnWords& r, const Word& w) {
  if (w.empty() || w.front() != r.fixed.letter) throw ContractViolation("word does not start with the fixed letter");
  std::vector<std::size_t> labels;
  for (const Word& piece : split_at(w, r.fixed.letter, true)) {
    const auto label = r.label_of(piece);
    if (!label) throw ContractViolation("piece " + to_string(piece) + " is not a return word");
    labels.push_back(*label);
  }
  return labels;
}

Recognizability check_recognizability(const Substitution& phi, std::size_t budget) {
  if (!is_primitive(phi).primitive) throw Refused("recognizability check needs a primitive substitution");
  Recognizability result;
  result.returns = return_words(phi, find_fixed_letter(phi), budget);
  result.power = static_cast<int>(phi.size());
  const auto& words = result.returns.words;
  std::size_t equal_pairs = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      Word vw = words[i], wv = words[j];
      vw.insert(vw.end(), words[j].begin(), words[j].end());
      wv.insert(wv.end(), words[i].begin(), words[i].end());
      ReturnPair pair{i, j, iterate(phi, vw, result.power, budget), iterate(phi, wv, result.power, budget)};
      if (pair.equal())
        ++equal_pairs;
      else if (!result.witness)
        result.witness = result.pairs.size();
      result.pairs.push_back(std::move(pair));
    }
  result.recognizable = result.witness.has_value();
  result.mixed = equal_pairs > 0 && equal_pairs < result.pairs.size();
  return result;
}

}  // namespace subst
