#include "trop/subdivision.hpp"

#include <algorithm>
#include <map>

namespace trop {

namespace {

// Lower-hull maximal cells of a lifted configuration: each cell is the full
// set of configuration indices lying on one non-vertical lower supporting
// hyperplane.
std::vector<std::vector<int>> lower_hull_cells(const std::vector<IVec>& points,
                                               const std::vector<Rat>& lifts) {
  const std::size_t N = points.size();
  ensure(N == lifts.size(), "lower hull: lift count mismatch");

  // Work inside the affine frame of the configuration.
  LatticePolytope conf_hull = LatticePolytope::hull(points);
  const int d = conf_hull.dim();
  std::vector<IVec> coords(N);
  for (std::size_t i = 0; i < N; ++i) {
    auto c = conf_hull.affine_coords(points[i]);
    ensure(c.has_value(), "lower hull: point outside affine frame");
    coords[i] = *c;
  }

  // Clear lift denominators; the subdivision only depends on positive scaling.
  Int den = 1;
  for (const auto& q : lifts) {
    Rat c = q;
    c.canonicalize();
    den = lcm(den, c.get_den());
  }
  std::vector<Int> w(N);
  for (std::size_t i = 0; i < N; ++i) {
    Rat c = lifts[i] * Rat(den);
    c.canonicalize();
    w[i] = c.get_num();
  }

  // Trivial subdivision when the lift is affine on the configuration.
  {
    IMat lifted_dirs(static_cast<Index>(N) - 1, d + 1);
    for (std::size_t i = 1; i < N; ++i) {
      for (Index j = 0; j < d; ++j) lifted_dirs(static_cast<Index>(i - 1), j) = coords[i](j) - coords[0](j);
      lifted_dirs(static_cast<Index>(i - 1), d) = w[i] - w[0];
    }
    if (rank(lifted_dirs) <= static_cast<Index>(d)) {
      std::vector<int> all(N);
      for (std::size_t i = 0; i < N; ++i) all[i] = static_cast<int>(i);
      return {all};
    }
  }

  std::vector<IVec> lifted(N);
  for (std::size_t i = 0; i < N; ++i) {
    IVec v(d + 1);
    for (Index j = 0; j < d; ++j) v(j) = coords[i](j);
    v(d) = w[i];
    lifted[i] = v;
  }
  // Duplicate lifted points cannot occur: configuration points are assumed
  // distinct, so coordinates already differ.
  LatticePolytope L = LatticePolytope::hull(lifted);
  ensure(L.dim() == d + 1, "lower hull: lifted configuration must be full-dimensional here");
  std::vector<std::vector<int>> cells;
  std::vector<IVec> lifted_coords(N);
  for (std::size_t i = 0; i < N; ++i) {
    auto c = L.affine_coords(lifted[i]);
    ensure(c.has_value(), "lower hull: lifted coordinate failure");
    lifted_coords[i] = *c;
  }
  for (std::size_t fi = 0; fi < L.facets().size(); ++fi) {
    // A facet is lower iff its outward ambient functional decreases along
    // the lift axis.
    IVec amb = L.ambient_facet_functional(static_cast<int>(fi));
    // amb attains its minimum over L exactly on the facet; lower facets are
    // those whose functional has positive last coordinate.
    if (amb(d) <= 0) continue;
    const auto& f = L.facets()[fi];
    std::vector<int> cell;
    for (std::size_t i = 0; i < N; ++i)
      if (f.normal.dot(lifted_coords[i]) == f.offset) cell.push_back(static_cast<int>(i));
    cells.push_back(std::move(cell));
  }
  ensure(!cells.empty(), "lower hull: no lower facets");
  return cells;
}

} // namespace

RegularSubdivision RegularSubdivision::build(std::vector<IVec> points, std::vector<Rat> lifts) {
  require(!points.empty(), "regular_subdivision: empty configuration");
  require(points.size() == lifts.size(), "regular_subdivision: one lift per point required");
  {
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "regular_subdivision: duplicate configuration points");
  }
  RegularSubdivision S;
  S.points_ = std::move(points);
  S.lifts_ = std::move(lifts);
  for (auto& l : S.lifts_) l.canonicalize(); // GMP comparisons need canonical form
  S.hull_ = LatticePolytope::hull(S.points_);

  std::vector<IVec> coords(S.points_.size());
  for (std::size_t i = 0; i < S.points_.size(); ++i) {
    auto c = S.hull_.affine_coords(S.points_[i]);
    ensure(c.has_value(), "regular_subdivision: coordinate failure");
    coords[i] = *c;
  }

  std::vector<std::vector<int>> maximal;
  if (S.points_.size() == 1) {
    maximal = {{0}};
  } else {
    maximal = lower_hull_cells(S.points_, S.lifts_);
  }

  // Face closure: faces of each maximal cell, with the configuration points
  // lying on them.
  std::map<std::vector<int>, int> dims; // point set -> dim
  for (const auto& cell : maximal) {
    std::vector<IVec> cpts;
    for (int i : cell) cpts.push_back(S.points_[static_cast<std::size_t>(i)]);
    LatticePolytope Q = LatticePolytope::hull(cpts);
    for (const auto& face : Q.faces()) {
      std::vector<int> sub;
      for (int i : cell) {
        auto c = Q.affine_coords(S.points_[static_cast<std::size_t>(i)]);
        ensure(c.has_value(), "face closure: coordinate failure");
        if (Q.coords_on_face(face, *c)) sub.push_back(i);
      }
      dims.emplace(std::move(sub), face.dim);
    }
  }

  for (auto& [pts, dim] : dims) {
    SubFace f;
    f.points = pts;
    f.dim = dim;
    f.maximal = (dim == S.hull_.dim());
    std::vector<IVec> raw;
    for (int i : pts) raw.push_back(S.points_[static_cast<std::size_t>(i)]);
    f.interior = !S.hull_.in_boundary(raw);
    S.faces_.push_back(std::move(f));
  }
  std::sort(S.faces_.begin(), S.faces_.end(), [](const SubFace& a, const SubFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.points < b.points;
  });
  return S;
}

std::vector<const SubFace*> RegularSubdivision::maximal_cells() const {
  std::vector<const SubFace*> out;
  for (const auto& f : faces_)
    if (f.maximal) out.push_back(&f);
  return out;
}

LatticePolytope RegularSubdivision::cell_polytope(const SubFace& f) const {
  std::vector<IVec> pts;
  for (int i : f.points) pts.push_back(points_[static_cast<std::size_t>(i)]);
  return LatticePolytope::hull(pts);
}

RegularSubdivision regular_subdivision(const std::vector<IVec>& points,
                                       const std::vector<Rat>& lifts) {
  return RegularSubdivision::build(points, lifts);
}

bool is_primitive_triangulation(const RegularSubdivision& s) {
  const int d = s.dim();
  for (const auto* cell : s.maximal_cells()) {
    if (static_cast<int>(cell->points.size()) != d + 1) return false;
    LatticePolytope Q = s.cell_polytope(*cell);
    if (Q.dim() != d) return false;
    if (Q.normalized_volume() != 1) return false;
  }
  return true;
}

namespace {

void lex_refine_rec(const std::vector<IVec>& points, const std::vector<std::vector<Rat>>& layers,
                    std::size_t layer, const std::vector<int>& subset,
                    std::vector<std::vector<int>>& out) {
  if (layer == layers.size()) {
    out.push_back(subset);
    return;
  }
  std::vector<IVec> pts;
  std::vector<Rat> lifts;
  for (int i : subset) {
    pts.push_back(points[static_cast<std::size_t>(i)]);
    lifts.push_back(layers[layer][static_cast<std::size_t>(i)]);
  }
  RegularSubdivision S = RegularSubdivision::build(pts, lifts);
  for (const auto* cell : S.maximal_cells()) {
    std::vector<int> sub;
    for (int j : cell->points) sub.push_back(subset[static_cast<std::size_t>(j)]);
    lex_refine_rec(points, layers, layer + 1, sub, out);
  }
}

} // namespace

std::vector<std::vector<int>> lex_refined_maximal_cells(
    const std::vector<IVec>& points, const std::vector<std::vector<Rat>>& layers) {
  require(!layers.empty(), "lex refinement: at least one lift layer required");
  for (const auto& l : layers)
    require(l.size() == points.size(), "lex refinement: layer size mismatch");
  std::vector<int> all(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  lex_refine_rec(points, layers, 0, all, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace trop
