#include "trop/generators.hpp"

#include "trop/subdivision.hpp"

namespace trop {

std::vector<Rat> convex_position_lifts(const std::vector<IVec>& points, std::mt19937_64& rng) {
  require(!points.empty(), "convex_position_lifts: empty configuration");
  const Index n = points[0].size();
  std::uniform_int_distribution<long> mdist(-2, 2);
  IMat m(n, n);
  do {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = mdist(rng);
  } while (determinant(m) == 0);
  // noise strictly below the convexity margin 1 of |Mw|^2
  const long denom = 1 << 20;
  std::uniform_int_distribution<long> noise(0, denom - 1);
  std::vector<Rat> lifts;
  for (const auto& p : points) {
    IVec q = m * p;
    Int sq = q.dot(q);
    lifts.push_back(Rat(sq) + make_rat(noise(rng), denom));
  }
  return lifts;
}

std::optional<std::vector<Rat>> certified_primitive_lift(const std::vector<IVec>& points,
                                                         std::uint64_t seed, int attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(0, 5);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Rat> lifts;
    if (attempt % 2 == 0) {
      lifts = convex_position_lifts(points, rng);
    } else {
      // plain random small lifts with a fine tie-break
      const long denom = 1 << 20;
      std::uniform_int_distribution<long> noise(0, denom - 1);
      for (const auto& p : points) {
        (void)p;
        lifts.push_back(Rat(small(rng)) + make_rat(noise(rng), denom));
      }
    }
    RegularSubdivision s = regular_subdivision(points, lifts);
    if (is_primitive_triangulation(s)) return lifts;
  }
  return std::nullopt;
}

std::vector<int> random_signs(std::size_t count, std::mt19937_64& rng) {
  std::vector<int> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back((rng() & 1) ? 1 : -1);
  return out;
}

TropicalPolynomial make_polynomial(const std::vector<IVec>& support,
                                   const std::vector<Rat>& lifts, const std::vector<int>& signs) {
  require(support.size() == lifts.size() && support.size() == signs.size(),
          "make_polynomial: size mismatch");
  std::vector<TropicalTerm> terms;
  for (std::size_t i = 0; i < support.size(); ++i)
    terms.push_back({support[i], lifts[i], signs[i]});
  return TropicalPolynomial(support[0].size(), std::move(terms));
}

std::optional<TropicalSystem> random_nondegenerate_system(
    const std::vector<LatticePolytope>& deltas, std::uint64_t seed, int attempts) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<IVec>> supports;
  for (const auto& d : deltas) supports.push_back(lattice_points(d));
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<TropicalPolynomial> polys;
    for (const auto& support : supports) {
      std::vector<Rat> lifts = convex_position_lifts(support, rng);
      polys.push_back(make_polynomial(support, lifts, random_signs(support.size(), rng)));
    }
    TropicalSystem sys(polys);
    if (is_nondegenerate_system(sys)) return sys;
  }
  return std::nullopt;
}

TropicalSystem random_square_system(const std::vector<LatticePolytope>& deltas,
                                    std::uint64_t seed, bool degenerate_bias) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(0, 4);
  std::vector<std::vector<IVec>> supports;
  for (const auto& d : deltas) supports.push_back(lattice_points(d));
  std::vector<TropicalPolynomial> polys;
  std::vector<Rat> shared;
  for (std::size_t f = 0; f < supports.size(); ++f) {
    const auto& support = supports[f];
    std::vector<Rat> lifts;
    if (degenerate_bias && f > 0 && supports[f].size() == supports[0].size() && (rng() & 1)) {
      lifts = shared; // shared lifts force non-transversal intersections
    } else {
      for (std::size_t i = 0; i < support.size(); ++i) lifts.emplace_back(small(rng));
    }
    if (f == 0) shared = lifts;
    polys.push_back(make_polynomial(support, lifts, random_signs(support.size(), rng)));
  }
  return TropicalSystem(polys);
}

LatticePolytope random_polygon_with_lattice_points(int target, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, 4);
  std::uniform_int_distribution<int> count(3, 6);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<IVec> pts;
    int c = count(rng);
    for (int i = 0; i < c; ++i) pts.push_back(ivec_of({coord(rng), coord(rng)}));
    LatticePolytope p = LatticePolytope::hull(pts);
    if (p.dim() != 2) continue;
    if (static_cast<int>(lattice_points(p).size()) == target) return p;
  }
  throw InternalError("random_polygon_with_lattice_points: search budget exhausted");
}

} // namespace trop
