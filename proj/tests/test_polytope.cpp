#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trop/polytope.hpp"
#include "trop/subdivision.hpp"

#include <random>

using namespace trop;

namespace {

std::vector<IVec> pts2(std::initializer_list<std::pair<long, long>> ps) {
  std::vector<IVec> out;
  for (auto [x, y] : ps) out.push_back(ivec_of({x, y}));
  return out;
}

std::vector<IVec> pts3(std::initializer_list<std::array<long, 3>> ps) {
  std::vector<IVec> out;
  for (auto a : ps) out.push_back(ivec_of({a[0], a[1], a[2]}));
  return out;
}

LatticePolytope unit_triangle() { return LatticePolytope::hull(pts2({{0, 0}, {1, 0}, {0, 1}})); }

LatticePolytope dilated_triangle(long d) {
  return LatticePolytope::hull(pts2({{0, 0}, {d, 0}, {0, d}}));
}

LatticePolytope unit_square() {
  return LatticePolytope::hull(pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

LatticePolytope unit_cube() {
  return LatticePolytope::hull(pts3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                     {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
}

// vertices (0,0,0),(1,0,0),(0,1,0),(1,1,2): no primitive triangulation exists
LatticePolytope volume2_tetrahedron() {
  return LatticePolytope::hull(pts3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}));
}

std::vector<Rat> rlist(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

} // namespace

TEST_CASE("convex hull drops duplicates and interior points") {
  auto P = LatticePolytope::hull(pts2({{0, 0}, {1, 0}, {0, 1}, {0, 0}}));
  CHECK(P.vertices().size() == 3);
  CHECK(P.dim() == 2);

  auto Q = LatticePolytope::hull(pts2({{0, 0}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(Q.vertices().size() == 3); // midpoints are not extreme
}

TEST_CASE("hull of the volume-2 tetrahedron") {
  auto T = volume2_tetrahedron();
  CHECK(T.dim() == 3);
  CHECK(T.vertices().size() == 4);
  CHECK(T.facets().size() == 4);
  CHECK(T.normalized_volume() == 2);
}

TEST_CASE("hull of a segment") {
  std::vector<IVec> pts = {ivec_of({0}), ivec_of({2}), ivec_of({1})};
  auto S = LatticePolytope::hull(pts);
  CHECK(S.dim() == 1);
  CHECK(S.vertices().size() == 2);
}

TEST_CASE("face lattice of the triangle") {
  auto P = unit_triangle();
  CHECK(P.faces_of_dim(0).size() == 3);
  CHECK(P.faces_of_dim(1).size() == 3);
  CHECK(P.faces_of_dim(2).size() == 1);
  CHECK(P.faces().size() == 7);
}

TEST_CASE("face lattice of the cube") {
  auto P = unit_cube();
  CHECK(P.faces_of_dim(0).size() == 8);
  CHECK(P.faces_of_dim(1).size() == 12);
  CHECK(P.faces_of_dim(2).size() == 6);
  CHECK(P.faces_of_dim(3).size() == 1);
}

TEST_CASE("minkowski sums") {
  auto T = unit_triangle();
  auto TT = minkowski_sum(T, T);
  CHECK(TT == dilated_triangle(2));

  auto seg_x = LatticePolytope::hull(pts2({{0, 0}, {1, 0}}));
  auto seg_y = LatticePolytope::hull(pts2({{0, 0}, {0, 1}}));
  CHECK(minkowski_sum(seg_x, seg_y) == unit_square());

  auto pt = LatticePolytope::hull(pts2({{3, 5}}));
  auto shifted = minkowski_sum(pt, T);
  CHECK(shifted.vertices()[0] == ivec_of({3, 5}));
  CHECK(shifted.normalized_volume() == 1);

  auto seg1 = LatticePolytope::hull(std::vector<IVec>{ivec_of({0}), ivec_of({1})});
  CHECK_THROWS_AS(minkowski_sum(seg1, T), ValidationError);
}

TEST_CASE("normalized volumes") {
  CHECK(unit_triangle().normalized_volume() == 1);
  CHECK(volume2_tetrahedron().normalized_volume() == 2);
  CHECK(unit_square().normalized_volume() == 2);
  CHECK(unit_cube().normalized_volume() == 6);
  // lower-dimensional: measured in M(P)
  auto seg = LatticePolytope::hull(pts2({{0, 0}, {2, 2}}));
  CHECK(seg.normalized_volume() == 2);
}

TEST_CASE("volume of primitive simplices is 1, under unimodular images too") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    // random unimodular 3x3 from row operations on the identity
    IMat u(3, 3);
    u.setZero();
    for (Index i = 0; i < 3; ++i) u(i, i) = 1;
    for (int step = 0; step < 6; ++step) {
      int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
      if (a == b) continue;
      u.row(a) += u.row(b) * Int(entry(rng));
    }
    std::vector<IVec> pts = {ivec_of({0, 0, 0})};
    for (Index i = 0; i < 3; ++i) pts.push_back(u.row(i).transpose());
    auto S = LatticePolytope::hull(pts);
    CHECK(S.normalized_volume() == 1);
  }
}

TEST_CASE("mixed volume examples") {
  auto T = unit_triangle();
  auto Q = unit_square();
  CHECK(mixed_volume({T, T}, {1, 1}) == Rat(1));
  CHECK(mixed_volume({Q, Q}, {1, 1}) == Rat(2));

  auto seg_a = LatticePolytope::hull(pts2({{0, 0}, {1, 1}}));
  auto seg_b = LatticePolytope::hull(pts2({{0, 0}, {2, 2}}));
  IMat id2(2, 2);
  id2.setZero();
  id2(0, 0) = id2(1, 1) = 1;
  CHECK(mixed_volume({seg_a, seg_b}, {1, 1}, &id2) == Rat(0));

  // MV with repeated polytope equals the normalized volume
  CHECK(mixed_volume({T, T}, {2, 0}) == Rat(1));
  CHECK(mixed_volume({Q, Q}, {0, 2}) == Rat(2));
  CHECK(mixed_volume({unit_cube(), unit_cube(), unit_cube()}, {1, 1, 1}) == Rat(6));

  CHECK_THROWS_AS(mixed_volume({T, T}, {1, 2}), ValidationError);
}

TEST_CASE("mixed volume when a factor is a point") {
  auto T = unit_triangle();
  auto pt = LatticePolytope::hull(pts2({{1, 1}}));
  IMat id2(2, 2);
  id2.setZero();
  id2(0, 0) = id2(1, 1) = 1;
  CHECK(mixed_volume({T, pt}, {1, 1}, &id2) == Rat(0));
}

TEST_CASE("lattice point enumeration") {
  auto T = unit_triangle();
  CHECK(lattice_points(T).size() == 3);
  CHECK(count_dilate(T, 3) == 10);
  CHECK(count_dilate(unit_cube(), 2) == 27);
  CHECK(count_dilate(T, 0) == 1);
  CHECK(count_dilate_interior(T, 0) == 0);
  CHECK(count_dilate_interior(T, 3) == 1);
  CHECK(count_dilate_interior(unit_cube(), 1) == 0);
  CHECK(count_dilate_interior(unit_cube(), 2) == 1);
}

TEST_CASE("ehrhart polynomials") {
  auto eT = ehrhart(unit_triangle());
  REQUIRE(eT.a.size() == 3);
  CHECK(eT.a[0] == Rat(1));
  CHECK(eT.a[1] == Rat(3, 2));
  CHECK(eT.a[2] == Rat(1, 2));

  auto e3 = ehrhart(dilated_triangle(3));
  CHECK(e3.a[0] == Rat(1));
  CHECK(e3.a[1] == Rat(9, 2));
  CHECK(e3.a[2] == Rat(9, 2));

  auto ec = ehrhart(unit_cube());
  CHECK(ec.a == std::vector<Rat>{Rat(1), Rat(3), Rat(3), Rat(1)});

  // extrapolation: evaluations beyond the interpolation grid match counts
  for (const auto& P : {unit_triangle(), dilated_triangle(3), unit_square()}) {
    auto e = ehrhart(P);
    int n = static_cast<int>(P.ambient_dim());
    for (int lam = n + 1; lam <= n + 2; ++lam)
      CHECK(e.eval(lam) == Rat(count_dilate(P, lam)));
  }

  auto seg = LatticePolytope::hull(pts2({{0, 0}, {1, 0}}));
  CHECK_THROWS_AS(ehrhart(seg), ValidationError);
  CHECK_NOTHROW(ehrhart(seg.restricted()));
}

TEST_CASE("psi coefficients") {
  auto psiT = psi_coefficients(unit_triangle());
  CHECK(psiT == std::vector<Int>{1, 0, 0});
  auto psi3 = psi_coefficients(dilated_triangle(3));
  CHECK(psi3 == std::vector<Int>{1, 7, 1});
  auto psiQ = psi_coefficients(unit_square());
  CHECK(psiQ[0] == 1);
}

TEST_CASE("cone series checks") {
  CHECK(cone_series_check(unit_triangle(), 5));
  CHECK(cone_series_check(unit_square(), 5));
  auto seg = LatticePolytope::hull(std::vector<IVec>{ivec_of({0}), ivec_of({2})});
  CHECK(cone_series_check(seg, 4));
  CHECK(cone_series_check(dilated_triangle(3), 5));
  CHECK(cone_series_check(unit_cube(), 5));
}

TEST_CASE("enumeration rejects bad arguments") {
  auto T = unit_triangle();
  CHECK_THROWS_AS(count_dilate(T, -1), ValidationError);
  CHECK_THROWS_AS(count_dilate_interior(T, -2), ValidationError);
  CHECK_THROWS_AS(cone_series_check(T, 2), ValidationError); // depth < n+1
}

TEST_CASE("regular subdivision rejects malformed configurations") {
  CHECK_THROWS_AS(regular_subdivision(pts2({{0, 0}, {0, 0}}), rlist({0, 1})),
                  ValidationError);
  CHECK_THROWS_AS(regular_subdivision(pts2({{0, 0}, {1, 0}}), rlist({0})), ValidationError);
}

TEST_CASE("regular subdivision: trivial lift") {
  auto S = regular_subdivision(pts2({{0, 0}, {1, 0}, {0, 1}}), rlist({0, 0, 0}));
  auto cells = S.maximal_cells();
  REQUIRE(cells.size() == 1);
  CHECK(cells[0]->points == std::vector<int>{0, 1, 2});
}

TEST_CASE("regular subdivision: lifted square splits along a diagonal") {
  // configuration order: (0,0),(1,0),(0,1),(1,1) with lift 1 at (1,1)
  auto S = regular_subdivision(pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), rlist({0, 0, 0, 1}));
  auto cells = S.maximal_cells();
  REQUIRE(cells.size() == 2);
  CHECK(cells[0]->points == std::vector<int>{0, 1, 2});
  CHECK(cells[1]->points == std::vector<int>{1, 2, 3});
  CHECK(is_primitive_triangulation(S));
}

TEST_CASE("regular subdivision: segment configurations") {
  std::vector<IVec> seg = {ivec_of({0}), ivec_of({1}), ivec_of({2})};
  auto S0 = regular_subdivision(seg, rlist({0, 0, 0}));
  CHECK(S0.maximal_cells().size() == 1);
  auto S1 = regular_subdivision(seg, rlist({0, -1, 0}));
  auto cells = S1.maximal_cells();
  REQUIRE(cells.size() == 2);
  CHECK(cells[0]->points == std::vector<int>{0, 1});
  CHECK(cells[1]->points == std::vector<int>{1, 2});
  CHECK(is_primitive_triangulation(S1));
}

TEST_CASE("regular subdivision cells tile the hull") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> lift(0, 6);
  auto P = dilated_triangle(3);
  auto pts = lattice_points(P);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> lifts;
    for (std::size_t i = 0; i < pts.size(); ++i) lifts.emplace_back(lift(rng));
    auto S = regular_subdivision(pts, lifts);
    Int total = 0;
    for (const auto* c : S.maximal_cells()) total += S.cell_polytope(*c).normalized_volume();
    CHECK(total == S.hull().normalized_volume());
    // faces of cells intersect in common faces: every pairwise intersection
    // of maximal cells appears in the face complex
    auto cells = S.maximal_cells();
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        std::vector<int> inter;
        std::set_intersection(cells[a]->points.begin(), cells[a]->points.end(),
                              cells[b]->points.begin(), cells[b]->points.end(),
                              std::back_inserter(inter));
        if (inter.empty()) continue;
        bool found = false;
        for (const auto& f : S.faces())
          if (f.points == inter) found = true;
        CHECK(found);
      }
  }
}

TEST_CASE("lift translation by affine functions preserves the subdivision") {
  auto pts = pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}});
  std::vector<Rat> lifts = {Rat(1), Rat(0), Rat(2), Rat(1), Rat(3)};
  auto S = regular_subdivision(pts, lifts);
  std::vector<Rat> shifted;
  for (std::size_t i = 0; i < pts.size(); ++i)
    shifted.push_back(lifts[i] + Rat(7) * Rat(pts[i](0)) - Rat(3) * Rat(pts[i](1)) + Rat(11));
  auto S2 = regular_subdivision(pts, shifted);
  REQUIRE(S.faces().size() == S2.faces().size());
  for (std::size_t i = 0; i < S.faces().size(); ++i)
    CHECK(S.faces()[i].points == S2.faces()[i].points);
}

TEST_CASE("primitivity detection") {
  auto sq = regular_subdivision(pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), rlist({0, 0, 0, 1}));
  CHECK(is_primitive_triangulation(sq));

  auto tetra = regular_subdivision(
      pts3({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}), rlist({0, 0, 0, 0}));
  CHECK_FALSE(is_primitive_triangulation(tetra));

  auto tri = regular_subdivision(pts2({{0, 0}, {1, 0}, {0, 1}}), rlist({0, 0, 0}));
  CHECK(is_primitive_triangulation(tri));
}

TEST_CASE("interior flags of subdivision faces") {
  auto S = regular_subdivision(pts2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), rlist({0, 0, 0, 1}));
  int interior_edges = 0, boundary_edges = 0;
  for (const auto& f : S.faces()) {
    if (f.dim != 1) continue;
    if (f.interior)
      ++interior_edges;
    else
      ++boundary_edges;
  }
  CHECK(interior_edges == 1); // the diagonal
  CHECK(boundary_edges == 4);
}

TEST_CASE("lexicographic refinement") {
  // refine the trivial subdivision of [0,2] by a second layer
  std::vector<IVec> seg = {ivec_of({0}), ivec_of({1}), ivec_of({2})};
  auto cells = lex_refined_maximal_cells(seg, {rlist({0, 0, 0}), rlist({0, -1, 0})});
  REQUIRE(cells.size() == 2);
  CHECK(cells[0] == std::vector<int>{0, 1});
  CHECK(cells[1] == std::vector<int>{1, 2});

  // first layer already separates; second layer refines only within cells
  auto cells2 = lex_refined_maximal_cells(seg, {rlist({0, -1, 0}), rlist({0, 5, 0})});
  REQUIRE(cells2.size() == 2);
}
