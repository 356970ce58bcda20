#include "subst/cohomology.hpp"

#include "subst/error.hpp"
#include "subst/linalg.hpp"
#include "subst/matrix.hpp"
#include "subst/properize.hpp"
#include "subst/recognizability.hpp"

namespace subst {

std::string to_string(CohomologyMethod m) {
  switch (m) {
    case CohomologyMethod::BD: return "BD";
    case CohomologyMethod::AP: return "AP";
    case CohomologyMethod::PROPER: return "PROPER";
  }
  return "?";
}

std::string render_rows(const IntMatrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

namespace {

std::string suffix(long long q, long long m, const char* plus) {
  std::string s;
  if (q > 0) s += " / Z^" + std::to_string(q);
  if (m > 0) s += std::string(" ") + plus + " Z^" + std::to_string(m);
  return s;
}

void require_aperiodic(const Substitution& phi) {
  if (!is_primitive(phi).primitive) throw Refused("cohomology needs a primitive substitution");
  if (!is_recognizable(phi)) throw Refused("substitution is not recognizable (periodic)");
}

CohomologyPresentation finish(CohomologyMethod method, IntMatrix core, long long q, long long m) {
  CohomologyPresentation p;
  p.method = method;
  p.core = std::move(core);
  p.quotient_rank = q;
  p.free_rank = m;
  p.total_rank = static_cast<long long>(eventual_rank(p.core)) - q + m;
  return p;
}

}  // namespace

std::string CohomologyPresentation::render() const {
  const IntMatrix t = core.transpose();
  std::string s = "lim^T[";
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    if (i) s += ";";
    for (Eigen::Index j = 0; j < t.cols(); ++j) s += (j ? "," : "") + t(i, j).str();
  }
  return s + "]" + suffix(quotient_rank, free_rank, "+");
}

std::string CohomologyPresentation::render_human() const {
  return "lim " + render_rows(core) + suffix(quotient_rank, free_rank, "(+)");
}

CohomologyPresentation cohomology_bd(const Substitution& phi) {
  require_aperiodic(phi);
  const EventualRange er = bd_subcomplex_and_eventual_range(phi);
  return finish(CohomologyMethod::BD, substitution_matrix(phi).transpose(),
                static_cast<long long>(er.components) - 1, er.rank);
}

APData ap_induced_matrix(const Substitution& phi, int search_bits) {
  APData d;
  d.complex = anderson_putnam(phi);
  const ComplexGraph& k = d.complex;
  const auto p2 = static_cast<Eigen::Index>(k.vertices.size());
  const auto p3 = static_cast<Eigen::Index>(k.edges.size());
  d.boundary = IntMatrix::Constant(p2, p3, BigInt(0));
  for (Eigen::Index e = 0; e < p3; ++e) {
    const auto& edge = k.edges[static_cast<std::size_t>(e)];
    d.boundary(static_cast<Eigen::Index>(edge.target), e) += 1;
    d.boundary(static_cast<Eigen::Index>(edge.source), e) -= 1;
  }
  d.expected_rank = static_cast<long long>(p3) - static_cast<long long>(p2) + static_cast<long long>(k.components());
  const IntMatrix kernel = integer_kernel_basis(d.boundary);
  if (kernel.cols() != d.expected_rank) throw ContractViolation("cycle space has unexpected rank");
  const auto r = static_cast<std::size_t>(d.expected_rank);

  // Greedy 0/1 cycles in lexicographic order (first edge most significant).
  std::vector<RatVector> chosen;
  if (p3 <= search_bits && r > 0) {
    std::vector<std::vector<int>> incidence(static_cast<std::size_t>(p3));
    for (Eigen::Index e = 0; e < p3; ++e)
      for (Eigen::Index v = 0; v < p2; ++v) incidence[static_cast<std::size_t>(e)].push_back(static_cast<int>(d.boundary(v, e).to_int64()));
    IndependentSet independent(p3);
    std::vector<int> boundary_sum(static_cast<std::size_t>(p2));
    const std::uint64_t limit = std::uint64_t(1) << p3;
    for (std::uint64_t x = 1; x < limit && chosen.size() < r; ++x) {
      std::fill(boundary_sum.begin(), boundary_sum.end(), 0);
      for (Eigen::Index e = 0; e < p3; ++e)
        if ((x >> (p3 - 1 - e)) & 1)
          for (Eigen::Index v = 0; v < p2; ++v) boundary_sum[static_cast<std::size_t>(v)] += incidence[static_cast<std::size_t>(e)][static_cast<std::size_t>(v)];
      if (std::any_of(boundary_sum.begin(), boundary_sum.end(), [](int s) { return s != 0; })) continue;
      RatVector v(p3);
      for (Eigen::Index e = 0; e < p3; ++e) v(e) = Rational(static_cast<int>((x >> (p3 - 1 - e)) & 1));
      if (independent.try_add(v)) chosen.push_back(v);
    }
  }
  d.zero_one_basis = chosen.size() == r;
  if (d.zero_one_basis) {
    // A Z-basis must express every integer kernel vector integrally.
    RatMatrix basis(p3, static_cast<Eigen::Index>(r));
    for (std::size_t j = 0; j < r; ++j) basis.col(static_cast<Eigen::Index>(j)) = chosen[j];
    for (Eigen::Index j = 0; j < kernel.cols() && d.zero_one_basis; ++j) {
      const auto y = solve(basis, to_rational(IntVector(kernel.col(j))));
      if (!y) throw ContractViolation("integer kernel vector outside the cycle span");
      for (Eigen::Index i = 0; i < y->size(); ++i)
        if (!(*y)(i).is_integer()) d.zero_one_basis = false;
    }
  }
  if (d.zero_one_basis) {
    d.cycles = IntMatrix(p3, static_cast<Eigen::Index>(r));
    for (std::size_t j = 0; j < r; ++j)
      for (Eigen::Index e = 0; e < p3; ++e) d.cycles(e, static_cast<Eigen::Index>(j)) = chosen[j](e).numerator();
  } else {
    d.cycles = kernel;
  }

  // Image of each cycle under the collared substitution, in cycle coordinates.
  const auto images = collared_substitution_on_edges(phi, k);
  const RatMatrix basis = to_rational(d.cycles);
  d.homology = IntMatrix::Constant(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r), BigInt(0));
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(r); ++j) {
    IntVector image = IntVector::Constant(p3, BigInt(0));
    for (Eigen::Index e = 0; e < p3; ++e) {
      if (d.cycles(e, j).is_zero()) continue;
      for (std::size_t target : images[static_cast<std::size_t>(e)]) image(static_cast<Eigen::Index>(target)) += d.cycles(e, j);
    }
    const auto y = solve(basis, to_rational(image));
    if (!y) throw ContractViolation("image cycle is not in the cycle span");
    for (Eigen::Index i = 0; i < y->size(); ++i) {
      if (!(*y)(i).is_integer()) throw ContractViolation("image cycle has fractional coordinates");
      d.homology(i, j) = (*y)(i).numerator();
    }
  }
  d.induced = d.homology.transpose();
  return d;
}

CohomologyPresentation cohomology_ap(const Substitution& phi) {
  require_aperiodic(phi);
  const APData d = ap_induced_matrix(phi);
  CohomologyPresentation p = finish(CohomologyMethod::AP, d.induced, 0, 0);
  p.note = d.zero_one_basis ? "0/1 cycle basis" : "integer kernel basis";
  return p;
}

CohomologyPresentation cohomology_proper(const Substitution& phi) {
  require_aperiodic(phi);
  const PreLeftProperization pre = pre_left_properize(phi);
  CohomologyPresentation p = finish(CohomologyMethod::PROPER, substitution_matrix(pre.eta).transpose(), 0, 0);
  p.note = "return words " + render_return_alphabet(pre.returns);
  return p;
}

CohomologyPresentation cohomology(const Substitution& phi, CohomologyMethod method) {
  switch (method) {
    case CohomologyMethod::BD: return cohomology_bd(phi);
    case CohomologyMethod::AP: return cohomology_ap(phi);
    case CohomologyMethod::PROPER: return cohomology_proper(phi);
  }
  throw ContractViolation("unknown cohomology method");
}

}  // namespace subst
