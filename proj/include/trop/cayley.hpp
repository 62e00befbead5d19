#pragma once

// Cayley configurations of tropical systems, the combinatorial Cayley trick,
// mixed subdivisions with privileged Minkowski representations, purity and
// tightness, system nondegeneracy, admissible face collections and face
// systems.

#include "trop/tropical.hpp"

namespace trop {

class TropicalSystem {
public:
  explicit TropicalSystem(std::vector<TropicalPolynomial> polys);

  Index ambient_dim() const { return n_; }
  int size() const { return static_cast<int>(polys_.size()); }
  const TropicalPolynomial& poly(int i) const { return polys_[static_cast<std::size_t>(i)]; }
  const std::vector<TropicalPolynomial>& polys() const { return polys_; }

  std::vector<LatticePolytope> newton_polytopes() const;

private:
  Index n_;
  std::vector<TropicalPolynomial> polys_;
};

struct CayleyConfiguration {
  TropicalSystem system;
  std::vector<IVec> points; // (w, e_i) in Z^{n+k}
  std::vector<Rat> lifts;
  std::vector<std::pair<int, int>> origin; // configuration index -> (factor, term)

  int factor_of(int config_index) const {
    return origin[static_cast<std::size_t>(config_index)].first;
  }
  int term_of(int config_index) const {
    return origin[static_cast<std::size_t>(config_index)].second;
  }
};

CayleyConfiguration cayley_configuration(const TropicalSystem& sys);

// A cell of the mixed subdivision of Delta = Delta_1 + ... + Delta_k with
// its privileged representation Gamma = Gamma_1 + ... + Gamma_k inherited
// from the corresponding face of the Cayley subdivision.
struct MixedCell {
  std::vector<std::vector<int>> factor_terms; // per factor: term indices, sorted
  std::vector<int> factor_dims;               // dim Gamma_i
  int dim = 0;                                // dim Gamma
  bool interior = false;                      // Gamma not contained in the boundary of Delta
  bool maximal = false;                       // dim Gamma == dim Delta
  std::vector<int> cayley_points;             // indices into the Cayley configuration
};

class MixedSubdivision {
public:
  const TropicalSystem& system() const { return conf_.system; }
  const CayleyConfiguration& configuration() const { return conf_; }
  const RegularSubdivision& cayley_subdivision() const { return cayley_; }
  const LatticePolytope& delta() const { return delta_; }
  const std::vector<MixedCell>& cells() const { return cells_; }
  std::vector<const MixedCell*> maximal_cells() const;

  LatticePolytope factor_polytope(const MixedCell& c, int i) const;
  LatticePolytope cell_polytope(const MixedCell& c) const;
  // The points of factor i in the cell, as exponent vectors.
  std::vector<IVec> factor_points(const MixedCell& c, int i) const;

  friend MixedSubdivision cayley_trick(const CayleyConfiguration& conf);

private:
  explicit MixedSubdivision(CayleyConfiguration conf) : conf_(std::move(conf)) {}

  CayleyConfiguration conf_;
  RegularSubdivision cayley_;
  LatticePolytope delta_;
  std::vector<MixedCell> cells_;
};

// Regular subdivision of the Cayley configuration converted cell-by-cell
// into the mixed subdivision of Delta.
MixedSubdivision cayley_trick(const CayleyConfiguration& conf);
inline MixedSubdivision cayley_trick(const TropicalSystem& sys) {
  return cayley_trick(cayley_configuration(sys));
}

// Independent construction of the same subdivision directly from the lower
// hull of the lifted Minkowski sum (used as an oracle against cayley_trick):
// maximal cells as factor-term index sets, sorted.
std::vector<std::vector<std::vector<int>>> mixed_cells_from_minkowski_sum(
    const TropicalSystem& sys);

// is_pure: every maximal cell is a direct Minkowski sum (factor dims add up).
// is_tight: pure, and every factor cell is a simplex.
std::pair<bool, bool> purity_flags(const MixedSubdivision& ms);

// The Cayley subdivision is a primitive triangulation.
bool is_nondegenerate_system(const TropicalSystem& sys);

struct AdmissibleCollection {
  std::vector<int> factors;                 // I, sorted, nonempty
  std::vector<std::vector<int>> face_terms; // per i in I: support indices on Gamma_i
  std::vector<int> face_dims;               // dim Gamma_i
};

// All admissible collections, enumerated through the faces of the Cayley
// polytope (conv of the unlifted Cayley points).
std::vector<AdmissibleCollection> admissible_collections(const TropicalSystem& sys);

// Test admissibility of an explicit collection of faces, each given by the
// set of support indices lying on it.
bool is_admissible(const TropicalSystem& sys, const std::vector<int>& factors,
                   const std::vector<std::vector<int>>& face_terms);

// The truncated system (f_i^{Gamma_i})_{i in I} expressed in the lattice
// M(sum Gamma_i).
struct FaceSystem {
  TropicalSystem system;
  std::vector<std::vector<int>> term_maps; // per factor: new index -> original index
  IMat basis;                              // rows: saturated basis of M(Gamma)
};

FaceSystem face_system(const TropicalSystem& sys, const AdmissibleCollection& adm);

// Faces of Delta = sum of the Newton polytopes together with their unique
// Minkowski decompositions into faces of the summands.
struct DeltaFaceDecomposition {
  const LatticePolytope::Face* face;        // face of delta()
  std::vector<std::vector<int>> face_terms; // per factor: support indices on Gamma_i
  std::vector<int> face_dims;
};

struct DeltaFaces {
  LatticePolytope delta;
  std::vector<DeltaFaceDecomposition> decompositions;
};

DeltaFaces minkowski_face_decompositions(const TropicalSystem& sys);

} // namespace trop
