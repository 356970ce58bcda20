#include <doctest.h>

#include <random>
#include <set>

#include "named.hpp"
#include "subst/error.hpp"
#include "subst/language.hpp"
#include "subst/matrix.hpp"
#include "subst/recognizability.hpp"

using namespace subst;
using named::sub;

namespace {

std::vector<std::string> strings(const WordSet& s) {
  std::vector<std::string> out;
  for (const Word& w : s) out.push_back(to_string(w));
  return out;
}

// Brute force: factors of a long iterate of the seed 0.
std::set<Word> factors_of_iterate(const Substitution& phi, std::size_t n, std::size_t min_length) {
  Word w{0};
  for (int p = 0; p < 40 && w.size() < min_length; ++p) w = subst::apply(phi, w);
  std::set<std::uint64_t> codes;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    std::uint64_t c = 0;
    for (std::size_t j = 0; j < n; ++j) c = c * 8 + w[i + j];
    codes.insert(c);
  }
  std::set<Word> out;
  for (std::uint64_t c : codes) {
    Word f(n);
    for (std::size_t j = n; j-- > 0; c /= 8) f[j] = static_cast<Letter>(c % 8);
    out.insert(f);
  }
  return out;
}

Substitution random_primitive(std::mt19937& rng, std::size_t letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(letters) - 1);
  while (true) {
    std::vector<Word> images(letters);
    for (auto& w : images) {
      w.resize(len(rng));
      for (auto& a : w) a = static_cast<Letter>(letter(rng));
    }
    Substitution phi(images);
    if (is_primitive(phi).primitive) return phi;
  }
}

}  // namespace

TEST_CASE("admitted words") {
  const Substitution pm = sub(named::kPlatinumMean);
  CHECK(strings(admitted_words(pm, 2)) == std::vector<std::string>{"00", "01", "10"});
  CHECK(strings(admitted_words(pm, 3)) == std::vector<std::string>{"000", "001", "010", "100"});
  CHECK(strings(admitted_words(sub(named::kThueMorse), 3)) ==
        std::vector<std::string>{"001", "010", "011", "100", "101", "110"});
  CHECK(admitted_words(sub("0"), 1).size() == 1);
  CHECK(admitted_words(sub("0"), 2).empty());
  CHECK_THROWS_AS(admitted_words(sub(named::kChacon), 2), Refused);
}

TEST_CASE("complexity function") {
  const auto fib = complexity(sub(named::kFibonacci), 50);
  for (std::size_t n = 1; n <= 50; ++n) CHECK(fib[n - 1] == n + 1);
  CHECK(complexity(sub(named::kPeriodDoubling), 10) == std::vector<std::size_t>{2, 3, 5, 6, 8, 10, 11, 12, 14, 16});
  CHECK(complexity(sub(named::kThueMorse), 2) == std::vector<std::size_t>{2, 4});
  CHECK_FALSE(complexity_indicates_periodic(fib));
  CHECK(complexity_indicates_periodic(complexity(sub("01,01"), 4)));
}

TEST_CASE("admitted words agree with factors of a long iterate") {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    const Substitution phi = random_primitive(rng, 2 + static_cast<std::size_t>(t % 2), 3);
    for (std::size_t n = 1; n <= 6; ++n) {
      const WordSet exact = admitted_words(phi, n);
      const auto brute = factors_of_iterate(phi, n, 200000);
      CHECK(std::set<Word>(exact.begin(), exact.end()) == brute);
      if (n > 1) {
        const WordSet shorter = admitted_words(phi, n - 1);
        for (const Word& w : exact) {
          CHECK(contains(shorter, Word(w.begin(), w.end() - 1)));
          CHECK(contains(shorter, Word(w.begin() + 1, w.end())));
        }
        CHECK(exact.size() >= shorter.size());
      }
    }
  }
}

TEST_CASE("fixed letters") {
  const auto tm = find_fixed_letter(sub(named::kThueMorse));
  CHECK(tm.letter == 0);
  CHECK(tm.order == 1);
  // phi(0) = 10, phi^2(0) = 010: letter 0 has order 2, and so does 1
  const auto rf = find_fixed_letter(sub(named::kReversedFibonacci));
  CHECK(rf.letter == 0);
  CHECK(rf.order == 2);
  const auto one = find_fixed_letter(sub("0"));
  CHECK(one.letter == 0);
  CHECK(one.order == 1);
}

TEST_CASE("return words") {
  const auto tm = return_words(sub(named::kThueMorse));
  CHECK(strings(tm.words) == std::vector<std::string>{"0", "01", "011"});
  CHECK(strings(return_words(sub(named::kFibonacci)).words) == std::vector<std::string>{"0", "01"});
  CHECK(factor_return_words(tm, parse_word("0110100")) == std::vector<std::size_t>{2, 1, 0, 0});
  CHECK_THROWS_AS(factor_return_words(tm, parse_word("0111")), ContractViolation);
}

TEST_CASE("return words are admitted and close under the substitution") {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    const Substitution phi = random_primitive(rng, 2 + static_cast<std::size_t>(t % 2), 3);
    const auto r = return_words(phi);
    const Substitution psi = power(phi, r.fixed.order);
    for (const Word& v : r.words) {
      CHECK(v.front() == r.fixed.letter);
      CHECK(std::count(v.begin(), v.end(), r.fixed.letter) == 1);
      Word va = v;
      va.push_back(r.fixed.letter);
      CHECK(contains(admitted_words(phi, va.size()), va));
      CHECK_NOTHROW(factor_return_words(r, subst::apply(psi, v)));
    }
  }
}

TEST_CASE("Thue-Morse recognizability table") {
  const auto rec = check_recognizability(sub(named::kThueMorse));
  CHECK(rec.recognizable);
  CHECK(rec.power == 2);
  REQUIRE(rec.pairs.size() == 3);
  const char* expected[3][2] = {{"011001101001", "011010010110"},
                                {"0110011010011001", "0110100110010110"},
                                {"01101001011010011001", "01101001100101101001"}};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(to_string(rec.pairs[i].forward) == expected[i][0]);
    CHECK(to_string(rec.pairs[i].backward) == expected[i][1]);
    CHECK_FALSE(rec.pairs[i].equal());
  }
  CHECK(rec.witness == std::size_t{0});
  CHECK_FALSE(rec.mixed);
}

TEST_CASE("recognizability verdicts") {
  CHECK_FALSE(is_recognizable(sub("01,01")));
  CHECK(is_recognizable(sub(named::kFibonacci)));
  const auto fib = check_recognizability(sub(named::kFibonacci));
  CHECK(to_string(fib.pairs[0].forward) == "01001001");
  CHECK(to_string(fib.pairs[0].backward) == "01001010");
  CHECK_FALSE(is_recognizable(sub("0")));
  CHECK_FALSE(is_recognizable(sub("00")));
  CHECK_THROWS_AS(check_recognizability(sub(named::kChacon)), Refused);
}

TEST_CASE("recognizability is invariant under relabelling and reversal") {
  std::mt19937 rng(23);
  for (int t = 0; t < 40; ++t) {
    const Substitution phi = random_primitive(rng, 2 + static_cast<std::size_t>(t % 2), 3);
    const bool verdict = is_recognizable(phi);
    CHECK(is_recognizable(reverse_substitution(phi)) == verdict);
    std::vector<Letter> perm(phi.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Letter>(perm.size() - 1 - i);
    CHECK(is_recognizable(permute_letters(phi, perm)) == verdict);
  }
}

TEST_CASE("non-recognizable exactly when periodic on small two-letter substitutions") {
  // every substitution on 2 letters with total image length <= 6
  int checked = 0;
  for (std::size_t total = 2; total <= 6; ++total)
    for (std::size_t len0 = 1; len0 < total; ++len0) {
      const std::size_t len1 = total - len0;
      for (unsigned bits = 0; bits < (1u << total); ++bits) {
        Word a, b;
        for (std::size_t i = 0; i < len0; ++i) a.push_back(static_cast<Letter>((bits >> i) & 1));
        for (std::size_t i = 0; i < len1; ++i) b.push_back(static_cast<Letter>((bits >> (len0 + i)) & 1));
        const Substitution phi({a, b});
        if (!is_primitive(phi).primitive) continue;
        // brute-force period detector: Morse-Hedlund on factors of a long iterate
        bool periodic = false;
        for (std::size_t n = 1; n <= 12 && !periodic; ++n) periodic = factors_of_iterate(phi, n, 20000).size() <= n;
        CHECK_MESSAGE(is_recognizable(phi) == !periodic, serialize(phi));
        ++checked;
      }
    }
  CHECK(checked > 50);
}
