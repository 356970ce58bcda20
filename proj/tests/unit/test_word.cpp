#include <doctest.h>

#include <random>

#include "named.hpp"
#include "subst/error.hpp"
#include "subst/matrix.hpp"
#include "subst/word.hpp"

using namespace subst;
using named::sub;

TEST_CASE("share-strings parse and serialize") {
  const Substitution fib = sub(named::kFibonacci);
  REQUIRE(fib.size() == 2);
  CHECK(fib[0] == Word{0, 1});
  CHECK(fib[1] == Word{0});
  CHECK(serialize(fib) == "01,0");
  CHECK(sub("0").size() == 1);
  CHECK_THROWS_AS(sub("01,2"), ParseError);
  CHECK_THROWS_AS(sub("01,"), ParseError);
  CHECK_THROWS_AS(sub(""), ParseError);
  CHECK_THROWS_AS(sub("0z"), ParseError);
  CHECK_THROWS_AS(sub("0,1 "), ParseError);
}

TEST_CASE("apply and iterate") {
  const Substitution fib = sub(named::kFibonacci);
  CHECK(subst::apply(fib, Word{0}) == Word{0, 1});
  CHECK(subst::apply(fib, Word{}).empty());
  CHECK(to_string(subst::apply(sub(named::kThueMorse), parse_word("01"))) == "0110");
  CHECK(to_string(iterate(fib, Word{0}, 4)) == "01001010");
  CHECK(to_string(iterate(sub(named::kPeriodDoubling), Word{0}, 3)) == "01000101");
  CHECK(iterate(fib, parse_word("0110"), 1) == subst::apply(fib, parse_word("0110")));
  CHECK_THROWS_AS(iterate(fib, Word{0}, 40, 1000), BudgetExceeded);
}

TEST_CASE("abelianization counts letters") {
  CHECK(abelianize(parse_word("0110"), 2) == (IntVector(2) << 2, 2).finished());
  CHECK(abelianize(Word{}, 3) == IntVector::Constant(3, BigInt(0)));
  // Rudin-Shapiro prefix 0102 0131: three 0s, three 1s
  CHECK(abelianize(parse_word("01020131"), 4) == (IntVector(4) << 3, 3, 1, 1).finished());
}

TEST_CASE("reversal and relabelling") {
  CHECK(serialize(reverse_substitution(sub(named::kFibonacci))) == "10,0");
  CHECK(serialize(reverse_substitution(sub("0"))) == "0");
  CHECK(serialize(reverse_substitution(sub(named::kThueMorse))) == "10,01");
  CHECK(serialize(permute_letters(sub(named::kFibonacci), {1, 0})) == "1,10");
  CHECK(serialize(permute_letters(sub(named::kFibonacci), {0, 1})) == "01,0");
  CHECK(serialize(permute_letters(sub(named::kThueMorse), {1, 0})) == "01,10");
  CHECK_THROWS_AS(permute_letters(sub(named::kFibonacci), {0, 0}), ParseError);
}

namespace {

Substitution random_substitution(std::mt19937& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(letters) - 1);
  std::vector<Word> images(letters);
  for (auto& w : images) {
    w.resize(len(rng));
    for (auto& a : w) a = static_cast<Letter>(letter(rng));
  }
  return Substitution(images);
}

Word random_word(std::mt19937& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(letters) - 1);
  Word w(len(rng));
  for (auto& a : w) a = static_cast<Letter>(letter(rng));
  return w;
}

}  // namespace

TEST_CASE("apply is a monoid homomorphism and round trips hold") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t l = 1 + static_cast<std::size_t>(t % 36);
    const Substitution phi = random_substitution(rng, l, 5);
    const Word u = random_word(rng, l, 8), v = random_word(rng, l, 8);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    Word image = subst::apply(phi, u);
    const Word iv = subst::apply(phi, v);
    image.insert(image.end(), iv.begin(), iv.end());
    CHECK(subst::apply(phi, uv) == image);
    CHECK(parse_substitution(serialize(phi)) == phi);
    CHECK(reverse_substitution(reverse_substitution(phi)) == phi);
    std::vector<Letter> perm(l);
    for (std::size_t i = 0; i < l; ++i) perm[i] = static_cast<Letter>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(permute_letters(permute_letters(phi, perm), inverse_permutation(perm)) == phi);
  }
}

TEST_CASE("properness") {
  CHECK(is_left_proper(sub(named::kFibonacci)));
  CHECK_FALSE(is_right_proper(sub(named::kFibonacci)));
  CHECK(is_proper(sub(named::kProperFibonacci)));
  CHECK_FALSE(is_left_proper(sub(named::kThueMorse)));
}
