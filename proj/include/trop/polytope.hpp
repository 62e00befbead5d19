#pragma once

// Lattice polytopes with exact face structure: hulls by supporting-hyperplane
// enumeration, Minkowski sums, normalized and mixed volumes, lattice point
// enumeration, Ehrhart polynomials and the cone series S(C,t)/T(C,t).

#include "trop/linalg.hpp"

#include <map>
#include <set>

namespace trop {

std::vector<IVec> dedup_points(std::vector<IVec> pts);

// Value type; computations are pure functions of the construction data.
// Face functionals and the triangulation are cached lazily, so concurrent
// use requires one instance per thread (copies are cheap and independent).
class LatticePolytope {
public:
  struct Facet {
    IVec normal;  // in affine-frame coordinates; normal · c <= offset on P
    Int offset;
    std::vector<int> verts; // vertices on the facet
  };

  struct Face {
    std::vector<int> verts;  // sorted indices into vertices()
    std::vector<int> facets; // facets containing the face; empty for P itself
    int dim = 0;
  };

  // Convex hull of a nonempty point list; duplicates and non-extreme points
  // are dropped.
  static LatticePolytope hull(const std::vector<IVec>& points);

  Index ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<IVec>& vertices() const { return verts_; }

  // Affine frame: x in aff(P) iff x = base + basis^T * c for integer c.
  const IVec& base() const { return base_; }
  const IMat& basis() const { return basis_; } // dim x ambient, saturated rows
  const std::vector<IVec>& vertex_coords() const { return averts_; }

  const std::vector<Facet>& facets() const { return facets_; }
  // All faces including P itself, sorted by (dim, verts); no empty face.
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<const Face*> faces_of_dim(int d) const;
  const Face& full_face() const; // the face equal to P

  // Affine-frame coordinates of a lattice point in aff(P); nullopt otherwise.
  std::optional<IVec> affine_coords(const IVec& p) const;
  bool contains(const IVec& p) const;
  bool coords_on_face(const Face& f, const IVec& coords) const;
  bool face_contains_point(const Face& f, const IVec& p) const;

  // Vertex indices minimizing the ambient functional u.
  std::vector<int> argmin_vertices(const IVec& u) const;
  // The face whose vertex set is exactly `verts`; throws if there is none.
  const Face& face_from_vertex_set(const std::vector<int>& verts) const;

  // Integer ambient functional attaining its minimum over P exactly on the
  // given facet (a representative; unique only modulo aff(P)^perp).
  const IVec& ambient_facet_functional(int facet_id) const;
  // An ambient functional whose argmin face of P is exactly `f` (zero vector
  // for P itself).
  IVec ambient_face_functional(const Face& f) const;

  // True when all listed points lie in a common facet (always false for
  // dim-0 polytopes, which have no proper faces).
  bool in_boundary(const std::vector<IVec>& pts) const;

  // Simplices of a triangulation of P (vertex index lists, each of size
  // dim+1), obtained by coning from a vertex over triangulated facets.
  const std::vector<std::vector<int>>& triangulation() const;

  // vol_dim(P) = dim! * Vol_dim(P) measured on M(P).
  Int normalized_volume() const;

  // Same polytope expressed in its affine-frame coordinates (full-dimensional
  // in Z^dim, anchored at a lattice vertex).
  LatticePolytope restricted() const;

  LatticePolytope dilate(const Int& factor) const;

  bool operator==(const LatticePolytope& o) const {
    return ambient_dim_ == o.ambient_dim_ && verts_ == o.verts_;
  }

private:
  Index ambient_dim_ = 0;
  int dim_ = 0;
  IVec base_;
  IMat basis_;
  std::vector<IVec> verts_;  // lex-sorted
  std::vector<IVec> averts_; // frame coordinates of verts_
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  mutable std::vector<IVec> ambient_facet_functionals_;
  mutable std::vector<std::vector<int>> triangulation_;
};

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps);

Int normalized_volume(const LatticePolytope& p);

// Euclidean volume of P measured against a saturated reference lattice with
// basis rows `ref` (rank l); zero when dim P < l.  Edge vectors of P must lie
// in the reference lattice.
Rat euclidean_volume(const LatticePolytope& p, const IMat& ref);

// MV_l(P_1..P_m ; t): t_1! ... t_m! times the coefficient of
// prod lambda_i^{t_i} in Vol_l(sum lambda_i P_i), computed by exact finite
// differences of Vol_l over the grid prod {0..t_i}.  `ref` defaults to the
// saturation of the combined edge span; its rank l must equal sum t_i.
Rat mixed_volume(const std::vector<LatticePolytope>& ps, const std::vector<int>& t,
                 const IMat* ref = nullptr);

std::vector<IVec> lattice_points(const LatticePolytope& p);
Int count_dilate(const LatticePolytope& p, const Int& lambda);
Int count_dilate_interior(const LatticePolytope& p, const Int& lambda);

struct EhrhartPolynomial {
  std::vector<Rat> a; // a[l] = coefficient of lambda^l, l = 0..n
  int degree() const { return static_cast<int>(a.size()) - 1; }
  Rat eval(const Int& lambda) const;
};

// Exact Ehrhart polynomial; requires dim P == ambient_dim (restrict first).
EhrhartPolynomial ehrhart(const LatticePolytope& p);

// Coefficients psi_0..psi_n of S(C,t) for the cone C over P x {1}.
std::vector<Int> psi_coefficients(const EhrhartPolynomial& e);
std::vector<Int> psi_coefficients(const LatticePolytope& p);

// Brute-force check of S(C,t), its vanishing beyond degree n, and the
// duality S(C,t) = t^{n+1} T(C, 1/t), all to the given depth (>= n+1).
bool cone_series_check(const LatticePolytope& p, int depth);

} // namespace trop
