#include "trop/multiplicity.hpp"

#include <algorithm>
#include <random>

namespace trop {

namespace {

IMat stack_dirs(const std::vector<std::vector<IVec>>& factor_pts, Index n) {
  std::vector<IVec> dirs;
  for (const auto& pts : factor_pts)
    for (std::size_t j = 1; j < pts.size(); ++j) dirs.push_back(pts[j] - pts[0]);
  IMat m(static_cast<Index>(dirs.size()), n);
  for (Index r = 0; r < m.rows(); ++r) m.row(r) = dirs[static_cast<std::size_t>(r)].transpose();
  return m;
}

// Transversal weight of a cell given by raw factor point sets:
// (prod vol(sigma_i)) * [M(sigma) : sum M(sigma_i)].  Each M(sigma_i) is the
// saturated lattice of vectors parallel to sigma_i, so the sum is generated
// by per-factor saturated bases, not by raw edge vectors.
std::pair<Int, Int> vol_product_and_index(const std::vector<std::vector<IVec>>& factor_pts,
                                          Index n) {
  Int prod = 1;
  std::vector<IVec> gen_rows;
  for (const auto& pts : factor_pts) {
    prod *= LatticePolytope::hull(pts).normalized_volume();
    IMat dirs(static_cast<Index>(pts.size()) - 1, n);
    for (std::size_t j = 1; j < pts.size(); ++j)
      dirs.row(static_cast<Index>(j - 1)) = (pts[j] - pts[0]).transpose();
    IMat sat = saturation(dirs);
    for (Index r = 0; r < sat.rows(); ++r) gen_rows.push_back(sat.row(r).transpose());
  }
  IMat gens(static_cast<Index>(gen_rows.size()), n);
  for (Index r = 0; r < gens.rows(); ++r) gens.row(r) = gen_rows[static_cast<std::size_t>(r)].transpose();
  IMat ambient = saturation(gens);
  auto idx = lattice_index(ambient, gens);
  ensure(idx.has_value(), "transversal weight: generators do not span M(sigma)");
  return {prod, *idx};
}

std::vector<std::vector<int>> positive_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (total < parts) return out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 1);
  int rest = total - parts;
  // distribute `rest` over `parts` slots
  std::vector<int> extra(static_cast<std::size_t>(parts), 0);
  for (;;) {
    int used = 0;
    for (int e : extra) used += e;
    if (used == rest) {
      std::vector<int> comp(static_cast<std::size_t>(parts));
      for (int i = 0; i < parts; ++i) comp[static_cast<std::size_t>(i)] = 1 + extra[static_cast<std::size_t>(i)];
      out.push_back(std::move(comp));
    }
    // next tuple with entries in [0, rest]
    int i = 0;
    while (i < parts && extra[static_cast<std::size_t>(i)] == rest) {
      extra[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == parts) break;
    ++extra[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

WeightRecord weight_transversal(const MixedSubdivision& ms, const MixedCell& cell) {
  const int k = ms.system().size();
  WeightRecord rec;
  rec.codim = cell.dim;
  rec.codims = cell.factor_dims;
  int dsum = 0;
  for (int d : cell.factor_dims) {
    require(d >= 1, "weight_transversal: every factor must have positive dimension");
    dsum += d;
  }
  require(dsum == cell.dim, "weight_transversal: cell is not transversal");
  rec.transversal = true;
  std::vector<std::vector<IVec>> factor_pts;
  for (int i = 0; i < k; ++i) factor_pts.push_back(ms.factor_points(cell, i));
  auto [prod, idx] = vol_product_and_index(factor_pts, ms.system().ambient_dim());
  rec.vol_product = prod;
  rec.index_factor = idx;
  rec.weight = prod * idx;
  return rec;
}

WeightRecord weight_general(const MixedSubdivision& ms, const MixedCell& cell) {
  const int k = ms.system().size();
  WeightRecord rec;
  rec.codim = cell.dim;
  rec.codims = cell.factor_dims;
  for (int d : cell.factor_dims)
    if (d == 0) return rec; // weight 0
  int dsum = 0;
  for (int d : cell.factor_dims) dsum += d;
  rec.transversal = (dsum == cell.dim);

  std::vector<LatticePolytope> sigmas;
  for (int i = 0; i < k; ++i) sigmas.push_back(ms.factor_polytope(cell, i));
  IMat ref = saturation(stack_dirs(
      [&] {
        std::vector<std::vector<IVec>> fp;
        for (int i = 0; i < k; ++i) fp.push_back(ms.factor_points(cell, i));
        return fp;
      }(),
      ms.system().ambient_dim()));
  ensure(ref.rows() == cell.dim, "weight_general: M(sigma) rank mismatch");

  Rat total = 0;
  for (const auto& comp : positive_compositions(cell.dim, k)) {
    Rat mv = mixed_volume(sigmas, comp, &ref);
    total += mv;
    rec.breakdown.push_back({comp, mv});
  }
  rec.weight = rat_to_int(total, "weight_general");
  ensure(rec.weight >= 0, "weight_general: negative weight");
  if (rec.transversal) {
    WeightRecord t = weight_transversal(ms, cell);
    ensure(t.weight == rec.weight,
           "weight_general: transversal formulas disagree");
    rec.vol_product = t.vol_product;
    rec.index_factor = t.index_factor;
  }
  return rec;
}

Int weight_by_perturbation(const MixedSubdivision& ms, const MixedCell& cell,
                           std::uint64_t seed) {
  const int k = ms.system().size();
  const Index n = ms.system().ambient_dim();
  for (int d : cell.factor_dims)
    require(d >= 1, "weight_by_perturbation: every factor must have positive dimension");
  const int d = cell.dim;

  // Cayley configuration of the subsystem spanned by the cell.
  std::vector<IVec> pts;
  std::vector<Rat> base_lift;
  std::vector<int> factor_of;
  std::vector<IVec> exps;
  for (int i = 0; i < k; ++i) {
    for (int t : cell.factor_terms[static_cast<std::size_t>(i)]) {
      const auto& term = ms.system().poly(i).terms()[static_cast<std::size_t>(t)];
      IVec p(n + k);
      for (Index c = 0; c < n; ++c) p(c) = term.exponent(c);
      for (int c = 0; c < k; ++c) p(n + c) = (c == i) ? 1 : 0;
      pts.push_back(std::move(p));
      base_lift.push_back(term.lift);
      factor_of.push_back(i);
      exps.push_back(term.exponent);
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-20, 20);
  const int retry_budget = 12;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    // layered lifts: the original lift first, then one generic translation
    // functional per factor, compared lexicographically
    std::vector<std::vector<Rat>> layers = {base_lift};
    for (int i = 0; i < k; ++i) {
      IVec v(n);
      for (Index c = 0; c < n; ++c) v(c) = entry(rng);
      std::vector<Rat> layer(pts.size(), Rat(0));
      for (std::size_t p = 0; p < pts.size(); ++p)
        if (factor_of[p] == i) layer[p] = Rat(v.dot(exps[p]));
      layers.push_back(std::move(layer));
    }
    auto refined = lex_refined_maximal_cells(pts, layers);

    bool pure = true;
    Int total = 0;
    for (const auto& rcell : refined) {
      std::vector<std::vector<IVec>> factor_pts(static_cast<std::size_t>(k));
      for (int p : rcell)
        factor_pts[static_cast<std::size_t>(factor_of[static_cast<std::size_t>(p)])].push_back(
            exps[static_cast<std::size_t>(p)]);
      int dim_sum = 0;
      bool missing = false;
      std::vector<IVec> dirs;
      for (const auto& fp : factor_pts) {
        if (fp.empty()) {
          missing = true;
          break;
        }
        IMat m(static_cast<Index>(fp.size()) - 1, n);
        for (std::size_t j = 1; j < fp.size(); ++j)
          m.row(static_cast<Index>(j - 1)) = (fp[j] - fp[0]).transpose();
        dim_sum += static_cast<int>(rank(m));
        for (std::size_t j = 1; j < fp.size(); ++j) dirs.push_back(fp[j] - fp[0]);
      }
      ensure(!missing, "perturbation: refined maximal cell missing a marker");
      IMat all(static_cast<Index>(dirs.size()), n);
      for (Index r = 0; r < all.rows(); ++r) all.row(r) = dirs[static_cast<std::size_t>(r)].transpose();
      int cell_dim = static_cast<int>(rank(all));
      ensure(cell_dim == d, "perturbation: refined cell has wrong dimension");
      if (dim_sum != cell_dim) {
        pure = false;
        break;
      }
      bool positive = true;
      for (const auto& fp : factor_pts)
        if (fp.size() < 2) positive = false; // some d_i = 0: weight 0
      if (!positive) continue;
      auto [prod, idx] = vol_product_and_index(factor_pts, n);
      total += prod * idx;
    }
    if (pure) return total;
  }
  throw PerturbationError("perturbation failed to produce a pure subdivision after retries");
}

Int stable_intersection_total(const TropicalSystem& sys) {
  const Index n = sys.ambient_dim();
  require(sys.size() == static_cast<int>(n),
          "stable_intersection_total: needs as many hypersurfaces as dimensions");
  MixedSubdivision ms = cayley_trick(sys);
  Int total = 0;
  for (const auto& cell : ms.cells()) {
    if (cell.dim != static_cast<int>(n)) continue;
    total += weight_general(ms, cell).weight;
  }
  IMat id(n, n);
  id.setZero();
  for (Index i = 0; i < n; ++i) id(i, i) = 1;
  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  Rat mv = mixed_volume(sys.newton_polytopes(), ones, &id);
  ensure(Rat(total) == mv, "stable intersection total differs from the mixed volume");
  return total;
}

bool verify_multiplicity_one(const TropicalSystem& sys) {
  for (const auto& adm : admissible_collections(sys)) {
    FaceSystem fs = face_system(sys, adm);
    MixedSubdivision ms = cayley_trick(fs.system);
    for (const auto& cell : ms.cells()) {
      bool positive = true;
      int dsum = 0;
      for (int d : cell.factor_dims) {
        if (d == 0) positive = false;
        dsum += d;
      }
      if (!positive) continue;
      if (dsum != cell.dim) return false; // non-transversal intersection
      WeightRecord rec = weight_transversal(ms, cell);
      if (rec.weight != 1) return false;
      // Cayley volume identity on simplicial cells:
      // vol(C(sigma_1..sigma_k)) = prod vol(sigma_i) * index
      bool simplicial = true;
      for (std::size_t i = 0; i < cell.factor_terms.size(); ++i)
        if (static_cast<int>(cell.factor_terms[i].size()) !=
            cell.factor_dims[i] + 1)
          simplicial = false;
      if (simplicial) {
        std::vector<IVec> cay;
        for (int ci : cell.cayley_points)
          cay.push_back(ms.configuration().points[static_cast<std::size_t>(ci)]);
        Int cay_vol = LatticePolytope::hull(cay).normalized_volume();
        if (cay_vol != rec.weight) return false;
      }
    }
  }
  return true;
}

} // namespace trop
