#include "subst/word.hpp"

#include <algorithm>
#include <numeric>

#include "subst/error.hpp"

namespace subst {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Substitution::Substitution(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw ParseError("substitution needs at least one letter");
  if (images_.size() > kMaxLetters) throw ParseError("alphabet too large");
  for (const Word& w : images_) {
    if (w.empty()) throw ParseError("substitution images must be non-empty");
    for (Letter a : w)
      if (a >= images_.size()) throw ParseError("image letter out of range");
  }
}

std::size_t Substitution::total_length() const {
  std::size_t n = 0;
  for (const Word& w : images_) n += w.size();
  return n;
}

char glyph(Letter a) {
  if (a < 10) return static_cast<char>('0' + a);
  if (a < kMaxGlyphLetters) return static_cast<char>('a' + (a - 10));
  throw ParseError("letter has no glyph: " + std::to_string(a));
}

namespace {

int glyph_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    const int v = glyph_value(c);
    if (v < 0) throw ParseError(std::string("invalid glyph '") + c + "'");
    w.push_back(static_cast<Letter>(v));
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter a : w) s.push_back(glyph(a));
  return s;
}

Substitution parse_substitution(std::string_view text) {
  if (text.empty()) throw ParseError("empty share-string");
  std::vector<Word> images;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    if (field.empty()) throw ParseError("empty image in field " + std::to_string(images.size()));
    images.push_back(parse_word(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (const Word& w : images)
    for (Letter a : w)
      if (a >= images.size())
        throw ParseError(std::string("glyph '") + glyph(a) + "' out of range for " +
                         std::to_string(images.size()) + " letters");
  return Substitution(std::move(images));
}

std::string serialize(const Substitution& phi) {
  std::string s;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) s.push_back(',');
    s += to_string(phi[i]);
  }
  return s;
}

Word apply(const Substitution& phi, const Word& w, std::size_t budget) {
  std::size_t length = 0;
  for (Letter a : w) length += phi[a].size();
  if (length > budget) throw BudgetExceeded("word length budget exceeded (" + std::to_string(length) + " letters)");
  Word out;
  out.reserve(length);
  for (Letter a : w) out.insert(out.end(), phi[a].begin(), phi[a].end());
  return out;
}

Word iterate(const Substitution& phi, const Word& seed, int power, std::size_t budget) {
  if (power < 1) throw ContractViolation("iterate: power must be positive");
  Word w = seed;
  for (int p = 0; p < power; ++p) w = apply(phi, w, budget);
  return w;
}

Substitution compose(const Substitution& phi, const Substitution& eta, std::size_t budget) {
  std::vector<Word> images;
  images.reserve(eta.size());
  for (const Word& w : eta.images()) images.push_back(apply(phi, w, budget));
  return Substitution(std::move(images));
}

Substitution power(const Substitution& phi, int n, std::size_t budget) {
  if (n < 1) throw ContractViolation("power: exponent must be positive");
  Substitution result = phi;
  for (int i = 1; i < n; ++i) result = compose(phi, result, budget);
  return result;
}

IntVector abelianize(const Word& w, std::size_t alphabet_size) {
  const auto counts = letter_counts(w, alphabet_size);
  IntVector v(static_cast<Eigen::Index>(alphabet_size));
  for (std::size_t i = 0; i < alphabet_size; ++i) v(static_cast<Eigen::Index>(i)) = BigInt(counts[i]);
  return v;
}

std::vector<std::int64_t> letter_counts(const Word& w, std::size_t alphabet_size) {
  std::vector<std::int64_t> counts(alphabet_size, 0);
  for (Letter a : w) ++counts.at(a);
  return counts;
}

Substitution reverse_substitution(const Substitution& phi) {
  std::vector<Word> images = phi.images();
  for (Word& w : images) std::reverse(w.begin(), w.end());
  return Substitution(std::move(images));
}

std::vector<Letter> inverse_permutation(const std::vector<Letter>& perm) {
  std::vector<Letter> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<Letter>(i);
  return inv;
}

Substitution permute_letters(const Substitution& phi, const std::vector<Letter>& perm) {
  const std::size_t l = phi.size();
  if (perm.size() != l) throw ParseError("permutation has wrong size");
  std::vector<bool> seen(l, false);
  for (Letter p : perm) {
    if (p >= l || seen[p]) throw ParseError("not a permutation");
    seen[p] = true;
  }
  std::vector<Word> images(l);
  for (std::size_t i = 0; i < l; ++i) {
    Word w = phi[i];
    for (Letter& a : w) a = perm[a];
    images[perm[i]] = std::move(w);
  }
  return Substitution(std::move(images));
}

bool is_left_proper(const Substitution& phi) {
  return std::all_of(phi.images().begin(), phi.images().end(),
                     [&](const Word& w) { return w.front() == phi[0].front(); });
}

bool is_right_proper(const Substitution& phi) {
  return std::all_of(phi.images().begin(), phi.images().end(),
                     [&](const Word& w) { return w.back() == phi[0].back(); });
}

}  // namespace subst
