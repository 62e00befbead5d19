#pragma once

// Tropical polynomials from leading-term Puiseux data, their dual
// subdivisions, truncations to Newton polytope faces and nonsingularity.
//
// Convention: a term with coefficient of valuation val(c) carries the lift
// l(w) = val(c); the tropical polynomial is max_w (x.w - l(w)) and its dual
// subdivision is the lower hull of the lifted exponents.

#include "trop/subdivision.hpp"

namespace trop {

struct PuiseuxLeadingTerm {
  Rat valuation; // val(g): the smallest exponent of the series
  int sign;      // sign of the leading real coefficient, +1 or -1
};

struct TropicalTerm {
  IVec exponent;
  Rat lift;     // l(w) = val(c_w)
  int sign = 0; // +1 / -1, or 0 when no real structure is given
};

class TropicalPolynomial {
public:
  TropicalPolynomial(Index ambient_dim, std::vector<TropicalTerm> terms);

  Index ambient_dim() const { return n_; }
  const std::vector<TropicalTerm>& terms() const { return terms_; }
  std::vector<IVec> exponents() const;
  std::vector<Rat> lift_values() const;
  bool all_signed() const;

  const LatticePolytope& newton_polytope() const;

private:
  Index n_;
  std::vector<TropicalTerm> terms_;
  mutable std::optional<LatticePolytope> newton_;
};

TropicalPolynomial tropicalize(Index ambient_dim,
                               const std::vector<std::pair<IVec, PuiseuxLeadingTerm>>& monomials);

struct TropicalHypersurfaceData {
  TropicalPolynomial poly;
  RegularSubdivision dual; // of the exponent configuration under the lifts

  // Duality with the cell complex of the hypersurface: a dual face sigma
  // corresponds to a cell xi with dim xi = n - dim sigma, unbounded iff
  // sigma lies in the boundary of the Newton polytope.
  int cell_dim(const SubFace& sigma) const {
    return static_cast<int>(poly.ambient_dim()) - sigma.dim;
  }
  bool cell_unbounded(const SubFace& sigma) const { return !sigma.interior; }
};

TropicalHypersurfaceData dual_subdivision(const TropicalPolynomial& f);

// Truncation of f to a face of its Newton polytope, re-expressed in the
// lattice M(Gamma) (ambient dimension dim Gamma).
struct Truncation {
  TropicalPolynomial poly;
  std::vector<int> term_map; // new term index -> index in the original f
  IVec base;                 // exponent chosen as the origin
  IMat basis;                // rows: saturated basis of M(Gamma)
};

Truncation truncation(const TropicalPolynomial& f, const LatticePolytope::Face& gamma);

// Both reduce to primitivity of the dual subdivision.
bool is_nonsingular(const TropicalPolynomial& f);
bool is_nondegenerate(const TropicalPolynomial& f);

// The point where x.w - l(w) takes a common value on all points of a
// full-dimensional dual cell (the hypersurface vertex dual to it).
QVec vertex_coordinates(const TropicalHypersurfaceData& data, const SubFace& cell);

} // namespace trop
