#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <random>
#include <set>

#include "named.hpp"
#include "subst/complexes.hpp"
#include "subst/enumeration.hpp"
#include "subst/error.hpp"
#include "subst/matrix.hpp"

using namespace subst;
using boost::multiprecision::cpp_int;

namespace {

using Dense = std::vector<std::vector<cpp_int>>;

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

std::vector<cpp_int> count_letters(const Word& w, std::size_t l) {
  std::vector<cpp_int> c(l, 0);
  for (Letter a : w) c[a] += 1;
  return c;
}

Dense dense(const IntMatrix& m) {
  Dense d(m.rows(), std::vector<cpp_int>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) d[i][j] = cpp_int(m(i, j).str());
  return d;
}

Dense multiply(const Dense& a, const Dense& b) {
  Dense c(a.size(), std::vector<cpp_int>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Fraction-free (Bareiss) elimination.
long bareiss_rank(Dense m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  long r = 0;
  cpp_int prev = 1;
  for (std::size_t c = 0; c < cols && r < static_cast<long>(rows); ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

// Spanning forest by depth-first search; every non-tree edge closes one independent cycle.
long non_forest_edges(const ComplexGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::vector<bool> seen(g.vertices.size(), false);
  long tree = 0;
  for (std::size_t s = 0; s < seen.size(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : adj[v])
        if (!seen[u]) seen[u] = true, ++tree, stack.push_back(u);
    }
  }
  return static_cast<long>(g.edges.size()) - tree;
}

long boundary_cycle_rank(const ComplexGraph& g) {
  if (g.edges.empty()) return 0;
  Dense d(g.vertices.size(), std::vector<cpp_int>(g.edges.size(), 0));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    d[g.edges[e].target][e] += 1;
    d[g.edges[e].source][e] -= 1;
  }
  return static_cast<long>(g.edges.size()) - (g.vertices.empty() ? 0 : bareiss_rank(d));
}

std::vector<Word> naive_reverse(const std::vector<Word>& images) {
  std::vector<Word> out = images;
  for (auto& w : out) std::reverse(w.begin(), w.end());
  return out;
}

std::vector<Word> naive_relabel(const std::vector<Word>& images, const std::vector<Letter>& perm) {
  std::vector<Word> out(images.size());
  for (std::size_t a = 0; a < images.size(); ++a) {
    Word w;
    for (Letter x : images[a]) w.push_back(perm[x]);
    out[perm[a]] = w;
  }
  return out;
}

bool naive_less(const std::vector<Word>& a, const std::vector<Word>& b) {
  auto total = [](const std::vector<Word>& v) {
    std::size_t t = 0;
    for (const auto& w : v) t += w.size();
    return t;
  };
  if (total(a) != total(b)) return total(a) < total(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return a[i].size() < b[i].size();
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<Word> naive_orbit_min(const std::vector<Word>& images) {
  std::vector<Letter> perm(images.size());
  std::iota(perm.begin(), perm.end(), Letter{0});
  std::vector<Word> best = images;
  do {
    for (const auto& v : {naive_relabel(images, perm), naive_relabel(naive_reverse(images), perm)})
      if (naive_less(v, best)) best = v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("property: abelianization intertwines with the substitution matrix") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t l = 1 + rng() % 5;
    const Substitution phi = random_substitution(rng, l, 6);
    Word w(rng() % 40);
    for (auto& a : w) a = static_cast<Letter>(rng() % l);
    CAPTURE(serialize(phi));
    const Dense m = dense(substitution_matrix(phi));
    const auto lhs = count_letters(subst::apply(phi, w), l);
    const auto ab = count_letters(w, l);
    std::vector<cpp_int> rhs(l, 0);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) rhs[i] += m[i][j] * ab[j];
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("property: the matrix of a composition is the product of matrices") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t l = 1 + rng() % 5;
    const Substitution phi = random_substitution(rng, l, 5), eta = random_substitution(rng, l, 5);
    CAPTURE(serialize(phi));
    CAPTURE(serialize(eta));
    const Substitution composed = compose(phi, eta);
    Dense direct(l, std::vector<cpp_int>(l));
    for (std::size_t j = 0; j < l; ++j) {
      const auto col = count_letters(composed[j], l);
      for (std::size_t i = 0; i < l; ++i) direct[i][j] = col[i];
    }
    REQUIRE(dense(substitution_matrix(composed)) == direct);
    REQUIRE(direct == multiply(dense(substitution_matrix(phi)), dense(substitution_matrix(eta))));
  }
}

TEST_CASE("property: eventual rank agrees with brute-force powers") {
  auto check = [](const IntMatrix& m) {
    const Dense d = dense(m);
    const std::size_t n = d.size();
    Dense p = d;
    for (std::size_t k = 1; k < n; ++k) p = multiply(p, d);
    // The rank sequence of powers is non-increasing and constant from k = n on.
    const long at_n = bareiss_rank(p);
    const long after = bareiss_rank(multiply(p, d));
    REQUIRE(at_n == after);
    REQUIRE(eventual_rank(m) == at_n);
  };
  for (int n = 1; n <= 3; ++n) {
    for (unsigned bits = 0; bits < (1u << (n * n)); ++bits) {
      IntMatrix m(n, n);
      for (int k = 0; k < n * n; ++k) m(k / n, k % n) = BigInt(static_cast<int>((bits >> k) & 1u));
      CAPTURE(bits);
      check(m);
    }
  }
  std::mt19937 rng(4);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = BigInt(static_cast<int>(rng() % 7) - (trial % 2 ? 3 : 0));
    check(m);
  }
}

TEST_CASE("property: Euler characteristic matches the spanning-forest cycle rank") {
  std::vector<Substitution> subs;
  for (const char* s : {named::kFibonacci, named::kThueMorse, named::kPeriodDoubling, named::kPlatinumMean,
                        named::kTribonacci, named::kRudinShapiro, named::kRecordA, named::kRecordB})
    subs.push_back(named::sub(s));
  for (std::size_t l : {2, 3}) {
    for (const auto& phi : enumerate_substitutions(l, 0, l == 2 ? 400 : 6000))
      if (is_primitive(phi).primitive) subs.push_back(phi);
  }
  std::size_t graphs = 0;
  for (const auto& phi : subs) {
    CAPTURE(serialize(phi));
    std::vector<ComplexGraph> generated = {barge_diamond(phi), anderson_putnam(phi)};
    const EventualRange er = bd_subcomplex_and_eventual_range(phi);
    generated.push_back(er.subcomplex);
    generated.push_back(er.range);
    for (const auto& g : generated) {
      const long forest = non_forest_edges(g);
      CHECK(g.euler_rank() == forest);
      CHECK(boundary_cycle_rank(g) == forest);
      ++graphs;
    }
    CHECK(er.rank == non_forest_edges(er.range));
  }
  MESSAGE("complexes checked: " << graphs);
  CHECK(graphs > 2000);
}

TEST_CASE("property: enumeration hits every orbit of the small universe once") {
  std::set<std::vector<Word>> orbit_minima;
  const std::vector<Word> images = {{0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (const auto& a : images)
    for (const auto& b : images) orbit_minima.insert(naive_orbit_min({a, b}));

  std::set<std::vector<Word>> enumerated;
  bool passed_universe = false;
  for (const auto& phi : enumerate_substitutions(2, 0, 200)) {
    if (phi.total_length() > 4) {
      passed_universe = true;
      break;
    }
    if (phi[0].size() > 2 || phi[1].size() > 2) continue;
    CHECK(enumerated.insert(phi.images()).second);
  }
  CHECK(passed_universe);
  CHECK(enumerated == orbit_minima);
  for (const auto& a : images)
    for (const auto& b : images) {
      const Substitution phi(std::vector<Word>{a, b});
      CHECK(enumerated.count(canonical_form(phi).images()) == 1);
    }
}
