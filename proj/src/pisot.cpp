#include "subst/pisot.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "subst/error.hpp"
#include "subst/matrix.hpp"
#include "subst/pf.hpp"
#include "subst/recognizability.hpp"

namespace subst {

std::string to_string(PisotReason r) {
  switch (r) {
    case PisotReason::NotPrimitive: return "not-primitive";
    case PisotReason::Periodic: return "periodic";
    case PisotReason::UnitCircleRoot: return "unit-circle-root";
    case PisotReason::ConjugateOutside: return "modulus-at-least-one";
    case PisotReason::ZeroEigenvalue: return "zero-eigenvalue";
    case PisotReason::Reducible: return "reducible";
    case PisotReason::IrreduciblePisot: return "irreducible-pisot";
    case PisotReason::UndecidedExact: return "undecided-exact";
  }
  return "?";
}

namespace {

bool single_simple_factor(const Factorization& f) {
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

// Every root of `minimal` other than the one in `pf` lies strictly inside.
bool conjugates_inside(const IntPolynomial& minimal, const Interval& pf, PisotReason& why) {
  if (has_unit_circle_root(minimal)) {
    why = PisotReason::UnitCircleRoot;
    return false;
  }
  if (!roots_strictly_inside_unit_disc(minimal, pf)) {
    why = PisotReason::ConjugateOutside;
    return false;
  }
  return true;
}

}  // namespace

PisotVerdict classify_pisot(const Substitution& phi, int max_degree) {
  PisotVerdict v;
  const IntMatrix m = substitution_matrix(phi);
  v.char_poly = char_poly(m);
  v.primitive = is_primitive(m).primitive;
  if (!v.primitive) return v;
  if (phi.size() == 1) {
    v.reason = PisotReason::Periodic;
    v.minimal_polynomial = v.char_poly;
    return v;
  }
  Factorization f;
  try {
    f = factor_over_Z(v.char_poly, max_degree);
  } catch (const UndecidedExact&) {
    v.decided = false;
    v.reason = PisotReason::UndecidedExact;
    return v;
  }
  const Interval pf = pf_root_interval(v.char_poly);
  for (const auto& factor : f.factors)
    if (count_real_roots(to_rational(factor.poly), pf.lo, pf.hi) > 0) v.minimal_polynomial = factor.poly;
  v.char_poly_irreducible = single_simple_factor(f);
  // An irrational lambda_PF forces irrational letter frequencies.
  v.aperiodic = v.char_poly_irreducible || is_recognizable(phi);
  if (!v.aperiodic) {
    v.reason = PisotReason::Periodic;
    return v;
  }
  if (!conjugates_inside(v.minimal_polynomial, pf, v.reason)) return v;
  v.pisot = true;
  v.irreducible_pisot = v.char_poly_irreducible;
  if (v.irreducible_pisot)
    v.reason = PisotReason::IrreduciblePisot;
  else if (v.char_poly.coeff(0).is_zero())
    v.reason = PisotReason::ZeroEigenvalue;
  else
    v.reason = PisotReason::Reducible;
  return v;
}

bool is_irreducible_pisot(const Substitution& phi) {
  if (phi.size() < 2) return false;
  const IntMatrix m = substitution_matrix(phi);
  if (!is_primitive(m).primitive) return false;
  const IntPolynomial p = char_poly(m);
  if (p.coeff(0).is_zero() || !single_simple_factor(factor_over_Z(p))) return false;
  PisotReason why;
  return conjugates_inside(p, pf_root_interval(p), why);
}

std::string to_string(const BalancedPair& p) { return "(" + to_string(p.u) + "," + to_string(p.v) + ")"; }

std::vector<BalancedPair> factor_balanced_pair(const BalancedPair& bp) {
  if (bp.u.size() != bp.v.size()) throw ContractViolation("pair is not balanced");
  std::vector<std::int64_t> diff(kMaxLetters, 0);
  std::size_t nonzero = 0;
  auto bump = [&](Letter a, std::int64_t d) {
    const bool was = diff[a] != 0;
    diff[a] += d;
    const bool is = diff[a] != 0;
    if (was && !is) --nonzero;
    if (!was && is) ++nonzero;
  };
  std::vector<BalancedPair> out;
  std::size_t start = 0;
  for (std::size_t p = 0; p < bp.u.size(); ++p) {
    bump(bp.u[p], 1);
    bump(bp.v[p], -1);
    if (nonzero == 0) {
      out.push_back({Word(bp.u.begin() + start, bp.u.begin() + p + 1), Word(bp.v.begin() + start, bp.v.begin() + p + 1)});
      start = p + 1;
    }
  }
  if (start != bp.u.size()) throw ContractViolation("pair is not balanced");
  return out;
}

BalancedPairResult balanced_pair_algorithm(const Substitution& phi, const Word& u, const Word& v,
                                           std::size_t pair_limit, std::size_t side_limit) {
  BalancedPairResult r;
  std::set<BalancedPair> seen;
  std::deque<BalancedPair> work;
  auto add_factors = [&](const BalancedPair& p) {
    for (auto& f : factor_balanced_pair(p))
      if (seen.insert(f).second) work.push_back(std::move(f));
  };
  add_factors({u, v});
  bool exhausted = false;
  while (!work.empty()) {
    if (seen.size() > pair_limit) {
      exhausted = true;
      break;
    }
    const BalancedPair p = std::move(work.front());
    work.pop_front();
    const std::size_t side = p.u.size();
    if (side > side_limit) {
      exhausted = true;
      break;
    }
    try {
      add_factors({apply(phi, p.u, side_limit), apply(phi, p.v, side_limit)});
    } catch (const BudgetExceeded&) {
      exhausted = true;
      break;
    }
  }
  if (!exhausted) r.terminates = true;
  r.pairs.assign(seen.begin(), seen.end());
  r.coincidence = std::any_of(r.pairs.begin(), r.pairs.end(), [](const BalancedPair& p) { return p.coincidence(); });
  return r;
}

std::optional<bool> pure_discrete_spectrum(const Substitution& phi, std::size_t pair_limit, std::size_t side_limit) {
  if (!classify_pisot(phi).irreducible_pisot)
    throw ContractViolation("pure discrete spectrum criterion needs an irreducible Pisot substitution");
  const auto r = balanced_pair_algorithm(phi, parse_word("01"), parse_word("10"), pair_limit, side_limit);
  if (!r.terminates) return std::nullopt;
  return r.coincidence;
}

namespace {

// Letters of phi^n(a), left to right, without materializing the word.
class PowerStream {
 public:
  PowerStream(const Substitution& phi, Letter a, int n) : phi_(phi), n_(n), frames_(static_cast<std::size_t>(n) + 1) {
    frames_[0] = {a, 0};
  }

  bool next(Letter& out) {
    if (n_ == 0) {
      if (depth_ < 0) return false;
      out = frames_[0].letter;
      depth_ = -1;
      return true;
    }
    while (depth_ >= 0) {
      Frame& f = frames_[static_cast<std::size_t>(depth_)];
      const Word& image = phi_[f.letter];
      if (f.pos == image.size()) {
        --depth_;
        continue;
      }
      const Letter c = image[f.pos++];
      if (depth_ + 1 == n_) {
        out = c;
        return true;
      }
      frames_[static_cast<std::size_t>(++depth_)] = {c, 0};
    }
    return false;
  }

 private:
  struct Frame {
    Letter letter;
    std::size_t pos;
  };
  const Substitution& phi_;
  int n_;
  int depth_ = 0;
  std::vector<Frame> frames_;
};

// First position where both words carry the same letter after balanced
// prefixes; scans at most `budget` positions.
std::optional<CoincidenceWitness> first_coincidence(const Substitution& phi, Letter i, Letter j, int n,
                                                    std::size_t budget, bool& exhausted) {
  const std::size_t letters = phi.size();
  std::vector<std::int64_t> diff(letters, 0);
  std::vector<std::int64_t> prefix(letters, 0);
  std::size_t nonzero = 0;
  auto bump = [&](Letter c, std::int64_t d) {
    const bool was = diff[c] != 0;
    diff[c] += d;
    const bool is = diff[c] != 0;
    if (was && !is) --nonzero;
    if (!was && is) ++nonzero;
  };
  PowerStream a(phi, i, n), b(phi, j, n);
  Letter x, y;
  for (std::size_t p = 0; a.next(x) && b.next(y); ++p) {
    if (p == budget) {
      exhausted = true;
      return std::nullopt;
    }
    if (nonzero == 0 && x == y) return CoincidenceWitness{n, p, x, prefix};
    bump(x, 1);
    bump(y, -1);
    ++prefix[x];
  }
  return std::nullopt;
}

}  // namespace

CoincidenceReport strong_coincidence(const Substitution& phi, int cap, std::size_t budget) {
  if (!is_primitive(phi).primitive) throw Refused("strong coincidence needs a primitive substitution");
  const std::size_t l = phi.size();
  CoincidenceReport r;
  r.cap = cap;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) r.pairs.push_back({static_cast<Letter>(i), static_cast<Letter>(j), std::nullopt});
  std::size_t open = r.pairs.size();
  for (int n = 1; n <= cap && open > 0 && !r.budget_exceeded; ++n) {
    for (auto& p : r.pairs) {
      if (p.witness) continue;
      p.witness = first_coincidence(phi, p.i, p.j, n, budget, r.budget_exceeded);
      if (p.witness) --open;
      if (r.budget_exceeded) break;
    }
  }
  r.strongly_coincident = open == 0;
  if (r.strongly_coincident)
    for (const auto& p : r.pairs) r.iteration = std::max(r.iteration, p.witness->n);
  return r;
}

}  // namespace subst
