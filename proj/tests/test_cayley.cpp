#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace trop;
using namespace troptest;

namespace {

TropicalPolynomial segment_poly(std::initializer_list<long> lifts) {
  std::vector<TropicalTerm> terms;
  long x = 0;
  for (long l : lifts) terms.push_back({ivec_of({x++}), Rat(l), 1});
  return TropicalPolynomial(1, terms);
}

} // namespace

TEST_CASE("cayley configuration dimensions") {
  // two segments [0,1]: 4 points in Z^3, hull of dimension 1 + 2 - 1 = 2
  TropicalSystem segs({segment_poly({0, 0}), segment_poly({0, 0})});
  auto conf = cayley_configuration(segs);
  CHECK(conf.points.size() == 4);
  CHECK(conf.points[0].size() == 3);
  CHECK(LatticePolytope::hull(conf.points).dim() == 2);

  // k = 1: the configuration is the original support at height 1
  TropicalSystem single({line()});
  auto conf1 = cayley_configuration(single);
  CHECK(LatticePolytope::hull(conf1.points).dim() == 2);

  // two triangles: 6 points in Z^4, hull of dimension 3
  auto conf2 = cayley_configuration(two_lines());
  CHECK(conf2.points.size() == 6);
  CHECK(LatticePolytope::hull(conf2.points).dim() == 3);
}

TEST_CASE("cayley trick on two generic lines") {
  auto ms = cayley_trick(two_lines());
  auto maximal = ms.maximal_cells();
  REQUIRE(maximal.size() == 3);
  int mixed = 0;
  for (const auto* c : maximal) {
    if (c->factor_dims == std::vector<int>{1, 1}) ++mixed;
    CHECK(c->dim == 2);
  }
  CHECK(mixed == 1);
  // the mixed subdivision tiles 2*triangle
  Int total = 0;
  for (const auto* c : maximal) total += ms.cell_polytope(*c).normalized_volume();
  CHECK(total == ms.delta().normalized_volume());
}

TEST_CASE("cayley trick with k = 1 reproduces the dual subdivision") {
  auto f = random_curve(2, 9);
  TropicalSystem sys({f});
  auto ms = cayley_trick(sys);
  auto dual = dual_subdivision(f);
  REQUIRE(ms.cells().size() == dual.dual.faces().size());
  for (std::size_t i = 0; i < ms.cells().size(); ++i) {
    // cells are sorted by (dim, terms); the dual faces by (dim, points)
    CHECK(ms.cells()[i].factor_terms[0] == dual.dual.faces()[i].points);
    CHECK(ms.cells()[i].dim == dual.dual.faces()[i].dim);
    CHECK(ms.cells()[i].interior == dual.dual.faces()[i].interior);
  }
}

TEST_CASE("cayley trick on two trivially lifted segments") {
  TropicalSystem segs({segment_poly({0, 0}), segment_poly({0, 0})});
  auto ms = cayley_trick(segs);
  auto maximal = ms.maximal_cells();
  REQUIRE(maximal.size() == 1);
  CHECK(maximal[0]->factor_terms == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  CHECK(ms.cell_polytope(*maximal[0]).normalized_volume() == 2); // [0,2]
}

TEST_CASE("purity and tightness") {
  auto [pure_gen, tight_gen] = purity_flags(cayley_trick(two_lines()));
  CHECK(pure_gen);
  CHECK(tight_gen);

  auto [pure_deg, tight_deg] = purity_flags(cayley_trick(two_identical_lines()));
  CHECK_FALSE(pure_deg);
  CHECK_FALSE(tight_deg);

  TropicalSystem single({random_curve(2, 10)});
  auto [pure1, tight1] = purity_flags(cayley_trick(single));
  CHECK(pure1);
  CHECK(tight1);
}

TEST_CASE("system nondegeneracy") {
  CHECK(is_nondegenerate_system(two_lines()));
  CHECK_FALSE(is_nondegenerate_system(two_identical_lines()));
  // k = 1 coincides with polynomial nondegeneracy
  auto f = random_curve(3, 11);
  CHECK(is_nondegenerate_system(TropicalSystem({f})) == is_nondegenerate(f));
}

TEST_CASE("admissible collections of a single triangle") {
  TropicalSystem single({line()});
  auto adms = admissible_collections(single);
  CHECK(adms.size() == 7); // the 7 nonempty faces of a triangle
  for (const auto& adm : adms) CHECK(adm.factors == std::vector<int>{0});
}

TEST_CASE("admissible collections of two segments") {
  TropicalSystem segs({segment_poly({0, 0}), segment_poly({0, 0})});
  auto adms = admissible_collections(segs);
  // faces of the unit square: 4 vertices (|I|=1), 2 single-marker edges
  // (|I|=1, full segment), 2 both-marker edges (vertex pairs), 1 square
  CHECK(adms.size() == 9);
  int singletons = 0, pairs = 0, full = 0;
  for (const auto& adm : adms) {
    if (adm.factors.size() == 1) {
      ++singletons;
    } else {
      ++pairs;
      bool is_full = adm.face_dims == std::vector<int>{1, 1};
      if (is_full) ++full;
    }
  }
  CHECK(singletons == 6);
  CHECK(pairs == 3);
  CHECK(full == 1);
}

TEST_CASE("admissibility test and face systems") {
  auto sys = two_lines();
  auto adms = admissible_collections(sys);

  // the full collection is admissible and reproduces the system
  bool saw_full = false;
  for (const auto& adm : adms) {
    if (adm.factors.size() == 2 && adm.face_dims == std::vector<int>{2, 2}) {
      saw_full = true;
      auto fs = face_system(sys, adm);
      CHECK(fs.system.size() == 2);
      CHECK(fs.system.ambient_dim() == 2);
      for (int i = 0; i < 2; ++i)
        CHECK(fs.system.poly(i).terms().size() == sys.poly(i).terms().size());
    }
  }
  CHECK(saw_full);

  // an edge face of 2*triangle gives two binomials on a segment
  bool saw_edge = false;
  for (const auto& adm : adms) {
    if (adm.factors.size() == 2 && adm.face_dims == std::vector<int>{1, 1}) {
      auto fs = face_system(sys, adm);
      CHECK(fs.system.ambient_dim() == 1);
      for (int i = 0; i < 2; ++i) CHECK(fs.system.poly(i).terms().size() == 2);
      saw_edge = true;
    }
  }
  CHECK(saw_edge);

  // a vertex face gives a system of monomials
  bool saw_vertex = false;
  for (const auto& adm : adms) {
    if (adm.factors.size() == 2 && adm.face_dims == std::vector<int>{0, 0}) {
      auto fs = face_system(sys, adm);
      CHECK(fs.system.ambient_dim() == 0);
      saw_vertex = true;
    }
  }
  CHECK(saw_vertex);

  CHECK(is_admissible(sys, {0}, {{0}}));     // a vertex of the first triangle
  CHECK(is_admissible(sys, {0}, {{0, 1}})); // an edge of the triangle

  // on a conic support, an edge without its midpoint is not a face support,
  // and a diagonal is not a face at all
  std::vector<TropicalTerm> conic_terms;
  for (const auto& p : lattice_points(triangle(2))) conic_terms.push_back({p, Rat(0), 1});
  TropicalSystem conic({TropicalPolynomial(2, conic_terms)});
  // lex order of lattice_points(2*triangle): (0,0),(0,1),(0,2),(1,0),(1,1),(2,0)
  CHECK_FALSE(is_admissible(conic, {0}, {{0, 5}}));    // edge missing its midpoint
  CHECK(is_admissible(conic, {0}, {{0, 3, 5}}));       // the full bottom edge
  CHECK_FALSE(is_admissible(conic, {0}, {{2, 5}}));    // hypotenuse missing (1,1)
  CHECK_FALSE(is_admissible(conic, {0}, {{0, 4}}));    // diagonal, not a face
  CHECK_THROWS_AS(face_system(conic, AdmissibleCollection{{0}, {{0, 5}}, {1}}),
                  ValidationError);
}

TEST_CASE("round-trip: cayley trick equals the direct Minkowski construction") {
  std::vector<TropicalSystem> corpus = {two_lines(), two_identical_lines()};
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    auto pts1 = lattice_points(triangle(2));
    auto pts2 = lattice_points(square());
    auto f = make_polynomial(pts1, convex_position_lifts(pts1, rng),
                             std::vector<int>(pts1.size(), 1));
    auto g = make_polynomial(pts2, convex_position_lifts(pts2, rng),
                             std::vector<int>(pts2.size(), 1));
    corpus.push_back(TropicalSystem({f, g}));
  }
  for (const auto& sys : corpus) {
    auto ms = cayley_trick(sys);
    std::vector<std::vector<std::vector<int>>> via_cayley;
    for (const auto* c : ms.maximal_cells()) via_cayley.push_back(c->factor_terms);
    std::sort(via_cayley.begin(), via_cayley.end());
    auto direct = mixed_cells_from_minkowski_sum(sys);
    CHECK(via_cayley == direct);
  }
}

TEST_CASE("mixed volumes add up over maximal cells") {
  std::mt19937_64 rng(41);
  IMat id2(2, 2);
  id2.setZero();
  id2(0, 0) = id2(1, 1) = 1;
  for (int trial = 0; trial < 5; ++trial) {
    auto pts1 = lattice_points(triangle(2));
    auto pts2 = lattice_points(square());
    auto f = make_polynomial(pts1, convex_position_lifts(pts1, rng),
                             std::vector<int>(pts1.size(), 1));
    auto g = make_polynomial(pts2, convex_position_lifts(pts2, rng),
                             std::vector<int>(pts2.size(), 1));
    TropicalSystem sys({f, g});
    auto ms = cayley_trick(sys);
    Rat total = 0;
    for (const auto* c : ms.maximal_cells()) {
      std::vector<LatticePolytope> parts = {ms.factor_polytope(*c, 0), ms.factor_polytope(*c, 1)};
      total += mixed_volume(parts, {1, 1}, &id2);
    }
    CHECK(total == mixed_volume(sys.newton_polytopes(), {1, 1}, &id2));
  }
}

TEST_CASE("mixed volumes add up over non-pure subdivisions too") {
  IMat id2(2, 2);
  id2.setZero();
  id2(0, 0) = id2(1, 1) = 1;
  for (std::uint64_t seed = 900; seed < 906; ++seed) {
    auto sys = random_square_system({triangle(2), triangle(2)}, seed, true);
    auto ms = cayley_trick(sys);
    Rat total = 0;
    for (const auto* c : ms.maximal_cells()) {
      std::vector<LatticePolytope> parts = {ms.factor_polytope(*c, 0), ms.factor_polytope(*c, 1)};
      total += mixed_volume(parts, {1, 1}, &id2);
    }
    CHECK(total == mixed_volume(sys.newton_polytopes(), {1, 1}, &id2));
  }
}

TEST_CASE("nondegeneracy is inherited by face systems") {
  auto sys = random_nondegenerate_system({triangle(2), square()}, 55);
  REQUIRE(sys.has_value());
  REQUIRE(is_nondegenerate_system(*sys));
  for (const auto& adm : admissible_collections(*sys)) {
    auto fs = face_system(*sys, adm);
    CHECK(is_nondegenerate_system(fs.system));
  }
}

TEST_CASE("triangulations of the Cayley polytope give tight mixed subdivisions") {
  auto sys = random_nondegenerate_system({triangle(1), triangle(2)}, 77);
  REQUIRE(sys.has_value());
  auto ms = cayley_trick(*sys);
  REQUIRE(is_primitive_triangulation(ms.cayley_subdivision()));
  auto [pure, tight] = purity_flags(ms);
  CHECK(pure);
  CHECK(tight);
}

TEST_CASE("minkowski face decompositions of two lines") {
  auto df = minkowski_face_decompositions(two_lines());
  CHECK(df.delta.normalized_volume() == 4); // 2*triangle
  int verts = 0, edges = 0, full = 0;
  for (const auto& dec : df.decompositions) {
    if (dec.face->dim == 0) {
      ++verts;
      CHECK(dec.face_dims == std::vector<int>{0, 0});
    } else if (dec.face->dim == 1) {
      ++edges;
      CHECK(dec.face_dims == std::vector<int>{1, 1});
    } else {
      ++full;
      CHECK(dec.face_dims == std::vector<int>{2, 2});
    }
  }
  CHECK(verts == 3);
  CHECK(edges == 3);
  CHECK(full == 1);
}
