#pragma once

// Shared constructions for the test suites.

#include "trop/generators.hpp"
#include "trop/invariants.hpp"

#include <random>

namespace troptest {

using namespace trop;

inline TropicalPolynomial line(std::initializer_list<long> lifts3 = {0, 0, 0},
                               std::initializer_list<int> signs3 = {1, 1, 1}) {
  std::vector<Rat> lifts;
  for (long l : lifts3) lifts.emplace_back(l);
  std::vector<int> signs(signs3);
  std::vector<TropicalTerm> terms = {
      {ivec_of({0, 0}), lifts[0], signs[0]},
      {ivec_of({1, 0}), lifts[1], signs[1]},
      {ivec_of({0, 1}), lifts[2], signs[2]},
  };
  return TropicalPolynomial(2, terms);
}

inline LatticePolytope triangle(long d = 1) {
  return LatticePolytope::hull({ivec_of({0, 0}), ivec_of({d, 0}), ivec_of({0, d})});
}

inline LatticePolytope square() {
  return LatticePolytope::hull(
      {ivec_of({0, 0}), ivec_of({1, 0}), ivec_of({0, 1}), ivec_of({1, 1})});
}

inline LatticePolytope cube() {
  std::vector<IVec> pts;
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 1; ++y)
      for (long z = 0; z <= 1; ++z) pts.push_back(ivec_of({x, y, z}));
  return LatticePolytope::hull(pts);
}

inline LatticePolytope simplex3(long d) {
  return LatticePolytope::hull(
      {ivec_of({0, 0, 0}), ivec_of({d, 0, 0}), ivec_of({0, d, 0}), ivec_of({0, 0, d})});
}

// A degree-d real tropical curve with certified primitive dual triangulation.
inline TropicalPolynomial random_curve(long d, std::uint64_t seed, bool all_plus = false) {
  auto pts = lattice_points(triangle(d));
  auto lifts = certified_primitive_lift(pts, seed);
  REQUIRE(lifts.has_value());
  std::mt19937_64 rng(seed ^ 0x5eed);
  auto signs = all_plus ? std::vector<int>(pts.size(), 1) : random_signs(pts.size(), rng);
  return make_polynomial(pts, *lifts, signs);
}

// Two generic tropical lines with all-plus signs.
inline TropicalSystem two_lines() {
  auto f = line({0, 0, 0});
  auto g = line({1, 3, 2});
  return TropicalSystem({f, g});
}

inline TropicalSystem two_identical_lines() {
  auto f = line({0, 0, 0});
  return TropicalSystem({f, f});
}

} // namespace troptest
