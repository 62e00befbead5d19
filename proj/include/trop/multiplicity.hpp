#pragma once

// Intersection multiplicity numbers of cells of a union of tropical
// hypersurfaces: the closed mixed-volume formulas, the perturbation
// definition as an independent oracle, and tropical Bernstein totals.

#include "trop/cayley.hpp"

namespace trop {

// Perturbation failed to reach a pure refinement within the retry budget.
struct PerturbationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightRecord {
  Int weight = 0;
  int codim = 0;                 // d = dim of the dual cell
  std::vector<int> codims;       // d_i = dim of the factor cells
  bool transversal = false;      // d == sum d_i with all d_i >= 1
  std::optional<Int> vol_product;  // transversal case: prod vol_{d_i}(sigma_i)
  std::optional<Int> index_factor; // transversal case: [M(sigma) : sum M(sigma_i)]
  struct Term {
    std::vector<int> composition; // t with t_i >= 1, sum = d
    Rat mixed_volume;
  };
  std::vector<Term> breakdown;   // composition sum of the general formula
};

// (prod vol_{d_i}(sigma_i)) * [M(sigma) : M(sigma_1)+...+M(sigma_k)];
// requires a transversal cell with all d_i >= 1.
WeightRecord weight_transversal(const MixedSubdivision& ms, const MixedCell& cell);

// Sum of MV_d(sigma_1..sigma_k ; t) over compositions t of d with positive
// parts; zero (empty sum) when d < k or some d_i = 0.
WeightRecord weight_general(const MixedSubdivision& ms, const MixedCell& cell);

// Refine the mixed subdivision of the cell with seeded generic translations
// (lexicographic symbolic perturbation) until pure; sum the transversal
// weights of the emerging codimension-d cells.
Int weight_by_perturbation(const MixedSubdivision& ms, const MixedCell& cell,
                           std::uint64_t seed);

// Sum of the weights of all point cells of a square system (k == n);
// internally asserted to equal MV_n of the Newton polytopes.
Int stable_intersection_total(const TropicalSystem& sys);

// True iff, over every admissible collection, all intersection cells of the
// truncated hypersurfaces are transversal of weight 1 (with the Cayley
// volume identity checked on simplicial cells).
bool verify_multiplicity_one(const TropicalSystem& sys);

} // namespace trop
