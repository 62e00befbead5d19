#pragma once

// Seeded, reproducible generators for test corpora: lifts certified to give
// primitive triangulations, random sign distributions, random nondegenerate
// systems and random polygons.

#include "trop/cayley.hpp"

#include <random>

namespace trop {

// Lifts of the form |M w|^2 + noise for a random integer matrix M with
// nonzero determinant: every configuration point stays on the lower hull, so
// on a polygon with its full lattice point set the subdivision is a full
// triangulation, hence primitive in dimension two.
std::vector<Rat> convex_position_lifts(const std::vector<IVec>& points, std::mt19937_64& rng);

// Seeded search for lifts whose regular subdivision is a primitive
// triangulation, certified by is_primitive_triangulation; nullopt when the
// budget runs out.
std::optional<std::vector<Rat>> certified_primitive_lift(const std::vector<IVec>& points,
                                                         std::uint64_t seed, int attempts = 64);

std::vector<int> random_signs(std::size_t count, std::mt19937_64& rng);

// A polynomial supported on all lattice points of the polytope, with the
// given lifts and random signs.
TropicalPolynomial make_polynomial(const std::vector<IVec>& support,
                                   const std::vector<Rat>& lifts, const std::vector<int>& signs);

// Random nondegenerate system on the given polytopes (supports = all lattice
// points), by seeded search over random lifts; nullopt when the budget runs
// out.
std::optional<TropicalSystem> random_nondegenerate_system(
    const std::vector<LatticePolytope>& deltas, std::uint64_t seed, int attempts = 200);

// Random square system (not necessarily nondegenerate) for Bernstein-type
// totals: small random lifts, occasionally shared across factors.
TropicalSystem random_square_system(const std::vector<LatticePolytope>& deltas,
                                    std::uint64_t seed, bool degenerate_bias);

// A lattice polygon with exactly `target` lattice points, found by seeded
// search over random vertex sets in a small box.
LatticePolytope random_polygon_with_lattice_points(int target, std::uint64_t seed);

} // namespace trop
