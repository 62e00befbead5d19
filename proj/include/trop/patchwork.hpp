#pragma once

// Combinatorial patchworking over the 2^n orthant copies: the sign extension
// rule, mixed-sign copy counting (brute force and F2 inclusion-exclusion),
// cell inventories of real tropical hypersurfaces and complete
// intersections, and their Euler characteristics.

#include "trop/multiplicity.hpp"

namespace trop {

// delta(w) * (-1)^{sum eps_i w_i}: a vertex and its mirror image keep the
// same sign exactly when the reflected coordinate is even.
int sign_in_copy(int sign, const IVec& w, std::uint64_t eps);

struct SignedSimplex {
  std::vector<IVec> verts;
  std::vector<int> signs; // +1 / -1 per vertex
};

// Number of eps in {0,1}^n such that every listed simplex carries both signs
// in the copy eps.  Computed by brute force (n <= 16) and by F2
// inclusion-exclusion; the two must agree.
Int count_mixed_copies(const std::vector<SignedSimplex>& simplices, int n);
Int count_mixed_copies_bruteforce(const std::vector<SignedSimplex>& simplices, int n);
Int count_mixed_copies_f2(const std::vector<SignedSimplex>& simplices, int n);

struct PatchworkComplex {
  int n = 0; // ambient dimension
  int k = 1; // number of polynomials
  // cell_counts[j] = number of open j-cells of the real tropical object
  std::vector<Int> cell_counts;
  struct Contribution {
    std::vector<std::vector<int>> factor_terms; // the dual mixed cell
    int cell_dim;                               // dim Gamma - k
    Int copies;
  };
  std::vector<Contribution> contributions;

  Int euler() const; // alternating sum over open cells
};

// One open (k-1)-cell per mixed-sign copy of each interior k-simplex of the
// dual triangulation; requires a nondegenerate real polynomial.
PatchworkComplex hypersurface_complex(const TropicalPolynomial& f);

// One open (dim Gamma - k)-cell per copy in which every factor of the
// privileged representation is mixed-sign, over the interior cells of the
// mixed subdivision with all factor dimensions positive; requires a
// nondegenerate real system.
PatchworkComplex ci_complex(const TropicalSystem& sys);

Int euler_torus(const PatchworkComplex& complex);

// Euler characteristic of the compactification: additivity over the faces
// of Delta, each face contributing the torus characteristic of its face
// system (zero whenever some factor of the decomposition is a vertex).
Int euler_compactified(const TropicalSystem& sys);

// Per-dimension counts of simplices of a primitive triangulation not
// contained in the boundary of the hull.
std::vector<Int> nb_k_direct(const RegularSubdivision& tri);

} // namespace trop
