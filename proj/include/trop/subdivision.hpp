#pragma once

// Regular subdivisions of point configurations induced by rational lifts:
// lower-hull cells with their full face closure, primitivity checking, and
// lexicographic refinement by layered lifts (symbolic perturbation).

#include "trop/polytope.hpp"

namespace trop {

struct SubFace {
  std::vector<int> points; // configuration indices, sorted
  int dim = 0;
  bool interior = false; // not contained in the boundary of the hull
  bool maximal = false;
};

class RegularSubdivision {
public:
  static RegularSubdivision build(std::vector<IVec> points, std::vector<Rat> lifts);

  const std::vector<IVec>& points() const { return points_; }
  const std::vector<Rat>& lifts() const { return lifts_; }
  const LatticePolytope& hull() const { return hull_; }
  int dim() const { return hull_.dim(); }

  // Full face complex, sorted by (dim, points); maximal cells carry
  // maximal = true and have dim == dim().
  const std::vector<SubFace>& faces() const { return faces_; }
  std::vector<const SubFace*> maximal_cells() const;

  LatticePolytope cell_polytope(const SubFace& f) const;

private:
  std::vector<IVec> points_;
  std::vector<Rat> lifts_;
  LatticePolytope hull_;
  std::vector<SubFace> faces_;
};

RegularSubdivision regular_subdivision(const std::vector<IVec>& points,
                                       const std::vector<Rat>& lifts);

// True iff every maximal cell is a simplex of normalized volume 1.
bool is_primitive_triangulation(const RegularSubdivision& s);

// Maximal cells of the subdivision induced by lexicographically layered
// lifts: layer 0 first, ties refined by layer 1 within each cell, and so on.
std::vector<std::vector<int>> lex_refined_maximal_cells(
    const std::vector<IVec>& points, const std::vector<std::vector<Rat>>& layers);

} // namespace trop
