#pragma once

// Closed formulas and identities: Stirling numbers, the S_{l,n} / C_{l,n}
// coefficient families, mixed signature and Euler characteristic of toric
// hypersurfaces, simplex-count formulas, the phi polynomial, reductions for
// complete intersections, and the main-theorem verifier.

#include "trop/patchwork.hpp"

namespace trop {

Int stirling2(int i, int j);

struct CoefficientTable {
  int N = 0;
  // S[n][l], C[n][l] for 0 <= l <= n <= N
  std::vector<std::vector<Int>> S, C;
};

CoefficientTable coefficient_table(int N);

// sigma~(Z) = -(-2)^n + sum_l S_{l,n} a_l for a nondegenerate hypersurface
// with full-dimensional Newton polytope of Ehrhart coefficients a.
Int sigma_hypersurface(const EhrhartPolynomial& a, int n);

// chi of the real nonsingular tropical hypersurface from the Ehrhart data
// (triple sum, cross-checked against the C_{l,n} table internally).
Int euler_formula_hypersurface(const EhrhartPolynomial& a, int n);

// nb_k = sum_{l>=k} k! S2(l+1,k+1) (-1)^{n-l} a_l, k = 0..n.
std::vector<Int> nb_k_formula(const EhrhartPolynomial& a, int n);

struct PhiPolynomial {
  std::vector<Rat> coeffs; // phi(u) = sum coeffs[i] u^i
  Rat eval(const Rat& u) const;
};

// phi(u) = [(u-1)^n + (-1)^{n+1} S(C,u)] / u; the division must be exact and
// phi(-1) equals sigma_hypersurface.
PhiPolynomial phi_polynomial(const EhrhartPolynomial& a, int n);

// Mixed signature of a complete intersection with the given Newton polytopes
// in Z^n via the hypersurfaces X_I = { sum_{i in I} y_i f_i - 1 = 0 }:
// sigma~(Y) = (-2)^n + (-1)^k sum_{I nonempty} sigma~(X_I).
Int sigma_complete_intersection(const std::vector<LatticePolytope>& deltas, Index n);

// Additivity over the faces of Delta = sum Delta_i with their unique
// Minkowski decompositions; decompositions with a vertex factor contribute 0.
Int sigma_compactified(const std::vector<LatticePolytope>& deltas);

struct MainTheoremReport {
  Int chi = 0;
  Int sigma = 0;
  bool equal = false;
  std::vector<Int> cell_counts;
  std::vector<std::pair<std::vector<int>, Int>> sigma_x_terms; // (I, sigma~(X_I))
  bool with_compact = false;
  Int chi_compact = 0;
  Int sigma_compact = 0;
  bool equal_compact = false;
  bool pass() const { return equal && (!with_compact || equal_compact); }
};

// chi(R Y^trop) versus the mixed signature computed from the Newton
// polytopes alone; the pair must agree (Theorem-level check; a mismatch is
// reported, never silently accepted).
MainTheoremReport verify_main_theorem(const TropicalSystem& sys, bool with_compact = false);

struct IdentityReport {
  bool vanlint = true;
  bool binrmq = true;
  bool recurrences = true;
  bool diagonal = true;
  std::vector<std::string> notes;
  bool all() const { return vanlint && binrmq && recurrences && diagonal; }
};

// Exhaustive checks of the four auxiliary identities for indices up to N.
IdentityReport identity_suite(int N);

} // namespace trop
