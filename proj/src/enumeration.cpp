#include "subst/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "subst/error.hpp"

namespace subst {

namespace {

// -1, 0, 1 in shortlex order.
int shortlex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const auto [x, y] = std::mismatch(a.begin(), a.end(), b.begin());
  if (x == a.end()) return 0;
  return *x < *y ? -1 : 1;
}

std::size_t total_length(const Substitution& phi) { return phi.total_length(); }

// Advances w as a base-l numeral; false when it wraps around.
bool increment(Word& w, std::size_t letters) {
  for (std::size_t p = w.size(); p-- > 0;) {
    if (w[p] + 1u < letters) {
      ++w[p];
      return true;
    }
    w[p] = 0;
  }
  return false;
}

}  // namespace

bool search_order_less(const Substitution& a, const Substitution& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::size_t ta = total_length(a), tb = total_length(b);
  if (ta != tb) return ta < tb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = shortlex_compare(a[i], b[i]); c != 0) return c < 0;
  return false;
}

SubstitutionEnumerator::SubstitutionEnumerator(std::size_t letters) : letters_(letters), total_(letters) {
  if (letters < 1 || letters > 36) throw ParseError("alphabet size out of range");
  images_.resize(letters);
  reset_after(0, total_);
  images_[0].assign(1, 0);
  current_ = Substitution(images_);
}

// Words k.. get the smallest tuple with total `remaining`.
void SubstitutionEnumerator::reset_after(std::size_t k, std::size_t remaining) {
  for (std::size_t i = k; i + 1 < letters_; ++i) {
    images_[i].assign(1, 0);
    --remaining;
  }
  images_[letters_ - 1].assign(remaining, 0);
}

void SubstitutionEnumerator::next() {
  std::size_t used = total_;
  for (std::size_t k = letters_; k-- > 0;) {
    used -= images_[k].size();  // length of words before k
    const std::size_t remaining = total_ - used;
    const std::size_t later = letters_ - 1 - k;
    if (increment(images_[k], letters_)) {
      if (later > 0) reset_after(k + 1, remaining - images_[k].size());
      current_ = Substitution(images_);
      return;
    }
    if (later > 0 && images_[k].size() + 1 + later <= remaining) {
      images_[k].assign(images_[k].size() + 1, 0);
      reset_after(k + 1, remaining - images_[k].size());
      current_ = Substitution(images_);
      return;
    }
  }
  ++total_;
  reset_after(0, total_);
  current_ = Substitution(images_);
}

std::uint64_t substitutions_of_total(std::size_t letters, std::size_t total) {
  if (total < letters) return 0;
  std::uint64_t binom = 1;
  for (std::size_t i = 1; i < letters; ++i) binom = binom * (total - letters + i) / i;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < total; ++i) power *= letters;
  return power * binom;
}

bool is_canonical(const Substitution& phi) {
  const std::size_t l = phi.size();
  std::size_t shortest = phi[0].size();
  for (const Word& w : phi.images()) shortest = std::min(shortest, w.size());
  if (phi[0].size() > shortest) return false;

  std::vector<Letter> perm(l), inverse(l);
  std::iota(perm.begin(), perm.end(), Letter{0});
  do {
    for (std::size_t i = 0; i < l; ++i) inverse[perm[i]] = static_cast<Letter>(i);
    for (bool reversed : {false, true}) {
      if (!reversed && std::is_sorted(perm.begin(), perm.end())) continue;
      // psi(b) = perm(phi(inverse(b))), possibly reversed; compare lazily.
      int c = 0;
      for (std::size_t b = 0; b < l && c == 0; ++b) {
        const Word& src = phi[inverse[b]];
        const Word& mine = phi[b];
        if (src.size() != mine.size()) {
          c = src.size() < mine.size() ? -1 : 1;
          break;
        }
        const std::size_t n = src.size();
        for (std::size_t p = 0; p < n; ++p) {
          const Letter x = perm[src[reversed ? n - 1 - p : p]];
          if (x != mine[p]) {
            c = x < mine[p] ? -1 : 1;
            break;
          }
        }
      }
      if (c < 0) return false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

Substitution canonical_form(const Substitution& phi) {
  std::vector<Letter> perm(phi.size());
  std::iota(perm.begin(), perm.end(), Letter{0});
  Substitution best = phi;
  do {
    const Substitution p = permute_letters(phi, perm);
    for (const Substitution& psi : {p, reverse_substitution(p)})
      if (search_order_less(psi, best)) best = psi;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Substitution> enumerate_substitutions(std::size_t letters, std::uint64_t start, std::uint64_t count) {
  std::vector<Substitution> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1u << 24)));
  SubstitutionEnumerator e(letters);
  std::uint64_t index = 0;
  while (out.size() < count) {
    if (is_canonical(e.current())) {
      if (index >= start) out.push_back(e.current());
      ++index;
    }
    e.next();
  }
  return out;
}

}  // namespace subst
