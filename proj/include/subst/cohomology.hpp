#pragma once

// First Cech cohomology of the tiling space, presented as a direct limit.

#include <string>

#include "subst/complexes.hpp"
#include "subst/scalar.hpp"
#include "subst/word.hpp"

namespace subst {

enum class CohomologyMethod { BD, AP, PROPER };
std::string to_string(CohomologyMethod m);

// lim C / Z^q (+) Z^m; q and m are zero except for BD.
struct CohomologyPresentation {
  CohomologyMethod method = CohomologyMethod::BD;
  IntMatrix core;
  long long quotient_rank = 0;
  long long free_rank = 0;
  long long total_rank = 0;  // e-rk(C) - q + m
  std::string note;          // e.g. how the AP cycle basis was chosen

  // lim^T[r1;r2;...] / Z^q + Z^m, rows of the transpose of C.
  std::string render() const;
  // lim [[...],[...]] / Z^q (+) Z^m with the rows of C.
  std::string render_human() const;
};

std::string render_rows(const IntMatrix& m);  // [[a,b],[c,d]]

// All three refuse substitutions that are not primitive and recognizable.
CohomologyPresentation cohomology_bd(const Substitution& phi);
CohomologyPresentation cohomology_ap(const Substitution& phi);
CohomologyPresentation cohomology_proper(const Substitution& phi);
CohomologyPresentation cohomology(const Substitution& phi, CohomologyMethod method);

inline constexpr int kZeroOneSearchBits = 24;

struct APData {
  ComplexGraph complex;
  IntMatrix boundary;  // rows L2, columns L3, bc - ab
  IntMatrix cycles;    // columns: basis of ker B
  IntMatrix homology;  // column j: coordinates of the image of cycle j
  IntMatrix induced;   // transpose of `homology`
  bool zero_one_basis = true;
  long long expected_rank = 0;  // p3 - p2 + components
};

APData ap_induced_matrix(const Substitution& phi, int search_bits = kZeroOneSearchBits);

}  // namespace subst
