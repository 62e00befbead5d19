#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

using namespace trop;
using namespace troptest;

namespace {

TropicalPolynomial binomial2(std::pair<long, long> a, std::pair<long, long> b) {
  std::vector<TropicalTerm> terms = {{ivec_of({a.first, a.second}), Rat(0), 1},
                                     {ivec_of({b.first, b.second}), Rat(0), 1}};
  return TropicalPolynomial(2, terms);
}

const MixedCell& only_maximal(const MixedSubdivision& ms) {
  auto cells = ms.maximal_cells();
  REQUIRE(cells.size() == 1);
  return *cells[0];
}

} // namespace

TEST_CASE("transversal weights of segment pairs") {
  // primitive transversal segments spanning Z^2
  TropicalSystem axes({binomial2({0, 0}, {1, 0}), binomial2({0, 0}, {0, 1})});
  auto ms = cayley_trick(axes);
  auto rec = weight_transversal(ms, only_maximal(ms));
  CHECK(rec.weight == 1);
  CHECK(*rec.vol_product == 1);
  CHECK(*rec.index_factor == 1);

  // segments along (1,1) and (1,-1): index 2
  TropicalSystem diag({binomial2({0, 0}, {1, 1}), binomial2({0, 1}, {1, 0})});
  auto ms2 = cayley_trick(diag);
  auto rec2 = weight_transversal(ms2, only_maximal(ms2));
  CHECK(rec2.weight == 2);
  CHECK(*rec2.vol_product == 1);
  CHECK(*rec2.index_factor == 2);

  // lattice length 2 times a primitive segment, index 1
  TropicalSystem lengths({binomial2({0, 0}, {2, 0}), binomial2({0, 0}, {0, 1})});
  auto ms3 = cayley_trick(lengths);
  auto rec3 = weight_transversal(ms3, only_maximal(ms3));
  CHECK(rec3.weight == 2);
  CHECK(*rec3.vol_product == 2);
  CHECK(*rec3.index_factor == 1);
}

TEST_CASE("weight_transversal rejects non-transversal cells") {
  auto ms = cayley_trick(two_identical_lines());
  auto cells = ms.maximal_cells();
  REQUIRE(cells.size() == 1);
  CHECK_THROWS_AS(weight_transversal(ms, *cells[0]), ValidationError);
}

TEST_CASE("general weight of two identical lines") {
  auto ms = cayley_trick(two_identical_lines());
  const auto& cell = only_maximal(ms);
  CHECK(cell.factor_dims == std::vector<int>{2, 2});
  auto rec = weight_general(ms, cell);
  CHECK_FALSE(rec.transversal);
  CHECK(rec.weight == 1); // MV_2(triangle, triangle)
  REQUIRE(rec.breakdown.size() == 1);
  CHECK(rec.breakdown[0].composition == std::vector<int>{1, 1});
}

TEST_CASE("general weight agrees with the transversal formula") {
  auto ms = cayley_trick(two_lines());
  for (const auto& cell : ms.cells()) {
    bool positive = true;
    int dsum = 0;
    for (int d : cell.factor_dims) {
      if (d == 0) positive = false;
      dsum += d;
    }
    if (!positive) {
      CHECK(weight_general(ms, cell).weight == 0);
      continue;
    }
    auto rec = weight_general(ms, cell);
    if (dsum == cell.dim) CHECK(rec.weight == weight_transversal(ms, cell).weight);
  }
}

TEST_CASE("hypersurface weights are cell volumes") {
  // univariate [0,2] support, trivial lift: one cell of volume 2
  std::vector<TropicalTerm> terms = {{ivec_of({0}), Rat(0), 1},
                                     {ivec_of({1}), Rat(0), 1},
                                     {ivec_of({2}), Rat(0), 1}};
  TropicalSystem sys({TropicalPolynomial(1, terms)});
  auto ms = cayley_trick(sys);
  const auto& cell = only_maximal(ms);
  CHECK(weight_general(ms, cell).weight == 2);
  CHECK(weight_by_perturbation(ms, cell, 5) == 2);
}

TEST_CASE("perturbation weight of two identical lines") {
  auto ms = cayley_trick(two_identical_lines());
  const auto& cell = only_maximal(ms);
  for (std::uint64_t seed : {1u, 2u, 3u})
    CHECK(weight_by_perturbation(ms, cell, seed) == 1);
}

TEST_CASE("perturbation does not change transversal cells") {
  TropicalSystem diag({binomial2({0, 0}, {1, 1}), binomial2({0, 1}, {1, 0})});
  auto ms = cayley_trick(diag);
  const auto& cell = only_maximal(ms);
  CHECK(weight_by_perturbation(ms, cell, 7) == 2);
}

TEST_CASE("perturbation equals the composition formula on random systems") {
  for (std::uint64_t seed = 100; seed < 112; ++seed) {
    auto sys = random_square_system({triangle(2), square()}, seed, true);
    auto ms = cayley_trick(sys);
    for (const auto& cell : ms.cells()) {
      bool positive = true;
      for (int d : cell.factor_dims)
        if (d == 0) positive = false;
      if (!positive) continue;
      Int expected = weight_general(ms, cell).weight;
      for (std::uint64_t s : {11u, 22u, 33u})
        CHECK(weight_by_perturbation(ms, cell, s) == expected);
    }
  }
}

TEST_CASE("stable intersection totals") {
  CHECK(stable_intersection_total(two_lines()) == 1);
  CHECK(stable_intersection_total(two_identical_lines()) == 1);

  // line and conic: MV_2(triangle, 2*triangle) = 2
  auto conic_pts = lattice_points(triangle(2));
  std::mt19937_64 rng(6);
  auto conic = make_polynomial(conic_pts, convex_position_lifts(conic_pts, rng),
                               std::vector<int>(conic_pts.size(), 1));
  CHECK(stable_intersection_total(TropicalSystem({line(), conic})) == 2);

  // two curves with unit square Newton polytopes
  auto sq_pts = lattice_points(square());
  auto c1 = make_polynomial(sq_pts, convex_position_lifts(sq_pts, rng),
                            std::vector<int>(sq_pts.size(), 1));
  auto c2 = make_polynomial(sq_pts, convex_position_lifts(sq_pts, rng),
                            std::vector<int>(sq_pts.size(), 1));
  CHECK(stable_intersection_total(TropicalSystem({c1, c2})) == 2);

  CHECK_THROWS_AS(stable_intersection_total(TropicalSystem({line()})), ValidationError);
}

TEST_CASE("multiplicity-one detection matches nondegeneracy") {
  CHECK(verify_multiplicity_one(two_lines()));
  CHECK_FALSE(verify_multiplicity_one(two_identical_lines()));

  // an index-2 transversal cell: nondegeneracy fails, weights are not 1
  TropicalSystem diag({binomial2({0, 0}, {1, 1}), binomial2({0, 1}, {1, 0})});
  CHECK_FALSE(verify_multiplicity_one(diag));
  CHECK_FALSE(is_nondegenerate_system(diag));

  for (std::uint64_t seed = 300; seed < 312; ++seed) {
    auto sys = random_square_system({triangle(2), triangle(1)}, seed, true);
    CHECK(verify_multiplicity_one(sys) == is_nondegenerate_system(sys));
  }
}
