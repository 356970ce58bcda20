// One line per acceptance criterion. Exit status is the number of failures.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "named.hpp"
#include "subst/cohomology.hpp"
#include "subst/error.hpp"
#include "subst/language.hpp"
#include "subst/matrix.hpp"
#include "subst/pf.hpp"
#include "subst/pisot.hpp"
#include "subst/properize.hpp"
#include "subst/recognizability.hpp"
#include "subst/search.hpp"

using namespace subst;
using named::sub;
namespace fs = std::filesystem;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures_.push_back(s.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::string rows(const IntMatrix& m) { return render_rows(m); }

std::string joined(const WordSet& s) {
  std::string out;
  for (const auto& w : s) out += (out.empty() ? "" : ",") + to_string(w);
  return out;
}

std::vector<long long> letter_count(const Word& w, std::size_t l) {
  std::vector<long long> c(l, 0);
  for (Letter a : w) ++c[a];
  return c;
}

// Column j counts the letters of phi(j).
std::vector<std::vector<long long>> counted_matrix(const Substitution& phi) {
  const std::size_t l = phi.size();
  std::vector<std::vector<long long>> m(l, std::vector<long long>(l, 0));
  for (std::size_t j = 0; j < l; ++j) {
    const auto c = letter_count(phi[j], l);
    for (std::size_t i = 0; i < l; ++i) m[i][j] = c[i];
  }
  return m;
}

bool matches(const IntMatrix& m, const std::vector<std::vector<long long>>& want) {
  if (static_cast<std::size_t>(m.rows()) != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    for (std::size_t j = 0; j < want.size(); ++j)
      if (m(i, j) != BigInt(want[i][j])) return false;
  return true;
}

// Boolean powers up to the Wielandt bound.
bool positive_power_exists(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> p(n, std::vector<bool>(n)), b = p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i][j] = b[i][j] = m[i][j] > 0;
  for (std::size_t k = 1; k <= (n - 1) * (n - 1) + 1; ++k) {
    bool all = true;
    for (const auto& r : p)
      for (bool x : r) all = all && x;
    if (all) return true;
    std::vector<std::vector<bool>> q(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t)
        if (p[i][t])
          for (std::size_t j = 0; j < n; ++j) q[i][j] = q[i][j] || b[t][j];
    p = q;
  }
  return false;
}

std::size_t distinct_factors(const Word& w, std::size_t n) {
  std::set<Word> f;
  for (std::size_t i = 0; i + n <= w.size(); ++i) f.insert(Word(w.begin() + i, w.begin() + i + n));
  return f.size();
}

void matrix_suite(Checks& c) {
  const Substitution pd = sub(named::kPeriodDoubling);
  c.equal(rows(substitution_matrix(pd)), std::string("[[1,2],[1,0]]"), "period-doubling matrix");
  c.expect(matches(substitution_matrix(pd), counted_matrix(pd)), "period-doubling matrix vs letter counts");

  const Substitution chacon = sub(named::kChacon);
  c.equal(rows(substitution_matrix(chacon)), std::string("[[3,0],[1,1]]"), "Chacon matrix");
  c.expect(!is_primitive(chacon).primitive, "Chacon reported primitive");
  c.expect(!positive_power_exists(counted_matrix(chacon)), "Chacon oracle finds a positive power");

  const Substitution rs = sub(named::kRudinShapiro);
  const IntMatrix m = substitution_matrix(rs);
  const PFData pf = pf_data(m);
  c.equal(to_string(pf.minimal_polynomial()), std::string("x - 2"), "Rudin-Shapiro lambda_PF polynomial");
  c.expect(pf.left.size() == 4 && pf.right.size() == 4, "Rudin-Shapiro PF vector sizes");
  for (const auto& x : pf.left) c.expect(x == RatPolynomial::constant(Rational(1)), "Rudin-Shapiro left entry != 1");
  for (const auto& x : pf.right) c.expect(x == RatPolynomial::constant(Rational(1, 4)), "Rudin-Shapiro right entry != 1/4");
  // Oracle: (1,1,1,1) M = 2 (1,1,1,1) and M (1,1,1,1) = 2 (1,1,1,1) in integers.
  for (Eigen::Index k = 0; k < 4; ++k) {
    BigInt col(0), row(0);
    for (Eigen::Index i = 0; i < 4; ++i) col += m(i, k), row += m(k, i);
    c.expect(col == BigInt(2) && row == BigInt(2), "Rudin-Shapiro eigenvector oracle");
  }
}

void words_suite(Checks& c) {
  const Substitution fib = sub(named::kFibonacci);
  const auto p = complexity(fib, 50);
  Word w = iterate(fib, Word{0}, 22);
  for (std::size_t n = 1; n <= 50; ++n) {
    c.equal(p.at(n - 1), n + 1, "Fibonacci p(" + std::to_string(n) + ")");
    c.equal(distinct_factors(w, n), n + 1, "Fibonacci factor oracle n=" + std::to_string(n));
  }
  const auto pd = complexity(sub(named::kPeriodDoubling), 10);
  c.expect(pd == std::vector<std::size_t>{2, 3, 5, 6, 8, 10, 11, 12, 14, 16}, "period-doubling complexity prefix");
  const Substitution pm = sub(named::kPlatinumMean);
  c.equal(joined(admitted_words(pm, 2)), std::string("00,01,10"), "platinum mean L^2");
  c.equal(joined(admitted_words(pm, 3)), std::string("000,001,010,100"), "platinum mean L^3");
}

void recognizability_suite(Checks& c) {
  const Recognizability tm = check_recognizability(sub(named::kThueMorse));
  c.expect(tm.recognizable, "Thue-Morse not recognizable");
  c.equal(tm.power, 2, "Thue-Morse power");
  const char* expected[3][2] = {{"011001101001", "011010010110"},
                                {"0110011010011001", "0110100110010110"},
                                {"01101001011010011001", "01101001100101101001"}};
  c.equal(tm.pairs.size(), std::size_t{3}, "Thue-Morse pair count");
  for (std::size_t i = 0; i < 3 && i < tm.pairs.size(); ++i) {
    c.equal(to_string(tm.pairs[i].forward), std::string(expected[i][0]), "Thue-Morse pair word");
    c.equal(to_string(tm.pairs[i].backward), std::string(expected[i][1]), "Thue-Morse pair word");
    c.expect(!tm.pairs[i].equal(), "Thue-Morse pair equal");
  }
  c.expect(!is_recognizable(sub("01,01")), "a->ab, b->ab reported recognizable");
}

void cohomology_suite(Checks& c) {
  const Substitution tm = sub(named::kThueMorse);
  const auto bd = cohomology_bd(tm);
  c.equal(bd.render_human(), std::string("lim [[1,1],[1,1]] (+) Z^1"), "Thue-Morse BD");
  const APData ap = ap_induced_matrix(tm);
  c.equal(rows(ap.boundary), std::string("[[-1,0,0,1,0,0],[1,-1,-1,0,1,0],[0,1,0,-1,-1,1],[0,0,1,0,0,-1]]"),
          "Thue-Morse AP boundary");
  const auto ap_h = cohomology_ap(tm);
  c.equal(to_string(char_poly(ap_h.core)), std::string("x^3 - x^2 - 2x"), "Thue-Morse M_AP char poly");
  const auto proper = cohomology_proper(tm);
  c.equal(rows(proper.core), std::string("[[0,1,0],[1,0,1],[1,1,1]]"), "Thue-Morse PROPER matrix");
  c.expect(bd.total_rank == 2 && ap_h.total_rank == 2 && proper.total_rank == 2, "Thue-Morse ranks");
  for (const char* s : {named::kFibonacci, named::kPlatinumMean}) {
    const Substitution phi = sub(s);
    const long long r = cohomology_bd(phi).total_rank;
    c.expect(r == cohomology_ap(phi).total_rank && r == cohomology_proper(phi).total_rank,
             std::string("methods disagree on ") + s);
  }
}

void properization_suite(Checks& c) {
  const PreLeftProperization pre = pre_left_properize(sub(named::kThueMorse));
  c.equal(serialize(pre.eta), std::string("1,20,210"), "Thue-Morse eta");
  c.equal(render_return_alphabet(pre.returns), std::string("[0],[01],[011]"), "Thue-Morse return alphabet");
  const Substitution eta2 = power(pre.eta, 2);
  c.expect(is_left_proper(eta2), "eta^2 not left-proper");
  c.expect(!is_left_proper(pre.eta), "eta already left-proper");
  c.equal(left_properize(pre.eta).n, 2, "left-properization power");
  c.expect(is_proper(compose(eta2, right_conjugate(eta2))), "eta^2 o (eta^2)^R not proper");
  const Substitution fib = sub(named::kFibonacci);
  c.equal(serialize(compose(fib, right_conjugate(fib))), std::string("001,01"), "Fibonacci properization");
}

// Each classification has its own one-second limit.
PisotVerdict timed_classify(Checks& c, const char* s) {
  const auto start = std::chrono::steady_clock::now();
  PisotVerdict v = classify_pisot(sub(s));
  c.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), std::string(s) + " took over 1 s");
  return v;
}

void pisot_suite(Checks& c) {
  for (const char* s : {named::kFibonacci, named::kSilverMean, named::kTribonacci, named::kFlippedTribonacci})
    c.expect(timed_classify(c, s).irreducible_pisot, std::string(s) + " not irreducible Pisot");
  const auto tm = timed_classify(c, named::kThueMorse);
  c.expect(tm.pisot && !tm.irreducible_pisot, "Thue-Morse should be Pisot and reducible");
  const auto np = timed_classify(c, named::kNotPisot);
  c.expect(!np.pisot, "001111,001 reported Pisot");
  c.equal(to_string(np.char_poly), std::string("x^2 - 3x - 6"), "001111,001 char poly");
}

void balanced_pair_suite(Checks& c) {
  const Substitution fib = sub(named::kFibonacci);
  const auto r = balanced_pair_algorithm(fib, parse_word("01"), parse_word("10"));
  std::set<std::string> got;
  for (const auto& p : r.pairs) got.insert(to_string(p));
  c.expect(got == std::set<std::string>{"(0,0)", "(1,1)", "(01,10)", "(10,01)"}, "Fibonacci I(01,10)");
  c.expect(r.terminates == true && r.coincidence, "Fibonacci balanced pairs do not terminate with coincidence");
  c.expect(pure_discrete_spectrum(fib) == true, "Fibonacci pure discrete spectrum");
}

void coincidence_suite(Checks& c) {
  c.equal(strong_coincidence(sub(named::kFibonacci)).iteration, 1, "Fibonacci coincidence");
  const Substitution rf = sub(named::kReversedFibonacci);
  const CoincidenceReport r = strong_coincidence(rf);
  c.equal(r.iteration, 3, "reversed Fibonacci coincidence");
  if (r.pairs.size() == 1 && r.pairs[0].witness) {
    const auto& w = *r.pairs[0].witness;
    // phi^3(0) = (10)(0)(10), phi^3(1) = (01)(0)().
    const Word a = iterate(rf, Word{0}, 3), b = iterate(rf, Word{1}, 3);
    c.equal(to_string(a), std::string("10010"), "phi^3(0)");
    c.equal(to_string(b), std::string("010"), "phi^3(1)");
    c.equal(w.position, std::size_t{2}, "witness position");
    c.expect(w.letter == 0 && a[w.position] == 0 && b[w.position] == 0, "witness letter");
    c.expect(w.prefix == std::vector<std::int64_t>{1, 1}, "witness prefix abelianization");
    c.expect(letter_count(Word(a.begin(), a.begin() + 2), 2) == letter_count(Word(b.begin(), b.begin() + 2), 2),
             "prefix oracle");
  } else {
    c.expect(false, "reversed Fibonacci witness missing");
  }
  c.equal(strong_coincidence(sub(named::kRecordA)).iteration, 10, "2011,02,0");
  c.equal(strong_coincidence(sub(named::kRecordB)).iteration, 10, "212101,0,1");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string published_histogram;

void search_suite(Checks& c) {
  const fs::path root = fs::temp_directory_path() / ("subst_acceptance_" + std::to_string(getpid()));
  fs::remove_all(root);
  SearchOptions o;
  o.letters = 3;
  o.from = 0;
  o.count = 200'000;
  o.cap = 30;
  o.workers = 1;
  o.out = root / "one";
  const SearchResult one = run_search(o);
  SearchOptions many = o;
  many.workers = std::max(4u, std::thread::hardware_concurrency());
  many.out = root / "many";
  const SearchResult parallel = run_search(many);

  c.expect(one.complete && parallel.complete, "search incomplete");
  c.equal(one.enumerated, std::uint64_t{200'000}, "enumerated");
  c.equal(one.cap_outs.size(), std::size_t{0}, "counterexamples (cap-outs)");
  c.equal(one.budget_outs.size(), std::size_t{0}, "budget-outs");
  c.equal(one.undecided.size(), std::size_t{0}, "undecided");
  c.expect(one.records == parallel.records, "records differ between worker counts");
  c.expect(slurp(o.out / "results.csv") == slurp(many.out / "results.csv"), "results.csv differs between worker counts");
  c.expect(slurp(o.out / "histogram.json") == slurp(many.out / "histogram.json"),
           "histogram.json differs between worker counts");
  for (const auto& r : one.records)
    if (r.outcome != SearchOutcome::Coincident) c.expect(false, "non-coincident record " + r.share);
  std::ostringstream h;
  h << one.records.size() << " irreducible Pisot;";
  for (const auto& [n, count] : one.histogram) h << " " << n << ":" << count;
  published_histogram = h.str();
  fs::remove_all(root);
}

void property_suites(Checks& c) {
  auto run = [](const std::string& args) {
    FILE* p = popen((std::string(SUBST_PROPERTY_TESTS) + " " + args + " 2>&1").c_str(), "r");
    std::string out;
    char buf[4096];
    for (std::size_t n; p && (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    const int status = p ? pclose(p) : -1;
    return std::make_pair(WIFEXITED(status) ? WEXITSTATUS(status) : -1, out);
  };
  const auto [list_code, listing] = run("--list-test-cases");
  c.equal(list_code, 0, "listing property suites");
  for (const char* suite : {"abelianization intertwines", "composition is the product", "eventual rank agrees",
                            "Euler characteristic", "enumeration hits every orbit"})
    c.expect(listing.find(suite) != std::string::npos, std::string("missing property suite: ") + suite);
  const auto [code, out] = run("");
  c.equal(code, 0, "property suites exit status");
  c.expect(out.find("Status: SUCCESS") != std::string::npos, "property suites did not succeed");
}

struct Criterion {
  const char* name;
  double limit_s;
  std::function<void(Checks&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"matrix suite", 1, matrix_suite},
      {"words suite", 5, words_suite},
      {"recognizability suite", 1, recognizability_suite},
      {"cohomology cross-method", 10, cohomology_suite},
      {"properization", 1, properization_suite},
      {"Pisot suite", 6, pisot_suite},
      {"balanced pairs", 1, balanced_pair_suite},
      {"strong coincidence", 10, coincidence_suite},
      {"desk-scale search", 1800, search_suite},
      {"property suites standalone", 600, property_suites},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Checks c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[k].limit_s) c.expect(false, "time limit exceeded");
    const bool ok = c.failures().empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << std::setw(2) << k + 1 << "] " << criteria[k].name << " ("
              << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(0)
              << criteria[k].limit_s << " s)\n";
    for (const auto& f : c.failures()) std::cout << "       " << f << "\n";
    if (k == 8 && !published_histogram.empty()) std::cout << "       histogram: " << published_histogram << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
