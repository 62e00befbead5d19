#include "trop/cayley.hpp"

#include <algorithm>
#include <map>

namespace trop {

TropicalSystem::TropicalSystem(std::vector<TropicalPolynomial> polys)
    : polys_(std::move(polys)) {
  require(!polys_.empty(), "tropical system needs at least one polynomial");
  n_ = polys_[0].ambient_dim();
  for (const auto& p : polys_)
    require(p.ambient_dim() == n_, "tropical system: shared ambient dimension required");
}

std::vector<LatticePolytope> TropicalSystem::newton_polytopes() const {
  std::vector<LatticePolytope> out;
  for (const auto& p : polys_) out.push_back(p.newton_polytope());
  return out;
}

CayleyConfiguration cayley_configuration(const TropicalSystem& sys) {
  const Index n = sys.ambient_dim();
  const int k = sys.size();
  CayleyConfiguration conf{sys, {}, {}, {}};
  for (int i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < sys.poly(i).terms().size(); ++j) {
      const auto& t = sys.poly(i).terms()[j];
      IVec p(n + k);
      for (Index c = 0; c < n; ++c) p(c) = t.exponent(c);
      for (int c = 0; c < k; ++c) p(n + c) = (c == i) ? 1 : 0;
      conf.points.push_back(std::move(p));
      conf.lifts.push_back(t.lift);
      conf.origin.emplace_back(i, static_cast<int>(j));
    }
  }
  return conf;
}

namespace {

// Shared cell-assembly: given per-factor term sets, fill dims, interiority
// and maximality against Delta.
MixedCell make_mixed_cell(const TropicalSystem& sys, const LatticePolytope& delta,
                          std::vector<std::vector<int>> factor_terms,
                          std::vector<int> cayley_points) {
  const int k = sys.size();
  MixedCell cell;
  cell.factor_terms = std::move(factor_terms);
  cell.cayley_points = std::move(cayley_points);
  cell.factor_dims.resize(static_cast<std::size_t>(k));
  std::vector<IVec> dirs;
  for (int i = 0; i < k; ++i) {
    const auto& terms = cell.factor_terms[static_cast<std::size_t>(i)];
    ensure(!terms.empty(), "mixed cell missing a factor");
    const IVec& base = sys.poly(i).terms()[static_cast<std::size_t>(terms[0])].exponent;
    std::vector<IVec> fdirs;
    for (std::size_t j = 1; j < terms.size(); ++j)
      fdirs.push_back(sys.poly(i).terms()[static_cast<std::size_t>(terms[j])].exponent - base);
    IMat m(static_cast<Index>(fdirs.size()), sys.ambient_dim());
    for (Index r = 0; r < m.rows(); ++r) m.row(r) = fdirs[static_cast<std::size_t>(r)].transpose();
    cell.factor_dims[static_cast<std::size_t>(i)] = static_cast<int>(rank(m));
    for (auto& d : fdirs) dirs.push_back(std::move(d));
  }
  IMat all(static_cast<Index>(dirs.size()), sys.ambient_dim());
  for (Index r = 0; r < all.rows(); ++r) all.row(r) = dirs[static_cast<std::size_t>(r)].transpose();
  cell.dim = static_cast<int>(rank(all));
  cell.maximal = (cell.dim == delta.dim());

  // Gamma lies in the boundary of Delta iff some facet functional of Delta
  // is minimized by every factor's points simultaneously.
  cell.interior = true;
  for (std::size_t fi = 0; fi < delta.facets().size(); ++fi) {
    IVec u = delta.ambient_facet_functional(static_cast<int>(fi));
    bool on_facet = true;
    for (int i = 0; i < k && on_facet; ++i) {
      Int mn;
      bool first = true;
      for (const auto& t : sys.poly(i).terms()) {
        Int v = u.dot(t.exponent);
        if (first || v < mn) mn = v;
        first = false;
      }
      for (int ti : cell.factor_terms[static_cast<std::size_t>(i)])
        if (u.dot(sys.poly(i).terms()[static_cast<std::size_t>(ti)].exponent) != mn) {
          on_facet = false;
          break;
        }
    }
    if (on_facet) {
      cell.interior = false;
      break;
    }
  }
  return cell;
}

LatticePolytope delta_of(const TropicalSystem& sys) {
  return minkowski_sum(sys.newton_polytopes());
}

} // namespace

MixedSubdivision cayley_trick(const CayleyConfiguration& conf) {
  const TropicalSystem& sys = conf.system;
  const int k = sys.size();
  MixedSubdivision ms(conf);
  ms.cayley_ = regular_subdivision(conf.points, conf.lifts);
  ms.delta_ = delta_of(sys);

  std::map<std::vector<std::vector<int>>, bool> seen;
  for (const auto& face : ms.cayley_.faces()) {
    std::vector<std::vector<int>> factor_terms(static_cast<std::size_t>(k));
    for (int ci : face.points)
      factor_terms[static_cast<std::size_t>(conf.factor_of(ci))].push_back(conf.term_of(ci));
    bool all_markers = true;
    for (const auto& ft : factor_terms)
      if (ft.empty()) all_markers = false;
    if (!all_markers) continue; // faces missing a marker are not mixed cells
    for (auto& ft : factor_terms) std::sort(ft.begin(), ft.end());
    ensure(seen.emplace(factor_terms, true).second,
           "cayley_trick: duplicate privileged representation");
    ms.cells_.push_back(make_mixed_cell(sys, ms.delta_, factor_terms, face.points));
    // dim C(Gamma_1..Gamma_k) = dim Gamma + k - 1
    ensure(ms.cells_.back().dim == face.dim - (k - 1),
           "cayley_trick: Cayley face dimension mismatch");
  }
  std::sort(ms.cells_.begin(), ms.cells_.end(), [](const MixedCell& a, const MixedCell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.factor_terms < b.factor_terms;
  });
  return ms;
}

std::vector<const MixedCell*> MixedSubdivision::maximal_cells() const {
  std::vector<const MixedCell*> out;
  for (const auto& c : cells_)
    if (c.maximal) out.push_back(&c);
  return out;
}

std::vector<IVec> MixedSubdivision::factor_points(const MixedCell& c, int i) const {
  std::vector<IVec> out;
  for (int t : c.factor_terms[static_cast<std::size_t>(i)])
    out.push_back(system().poly(i).terms()[static_cast<std::size_t>(t)].exponent);
  return out;
}

LatticePolytope MixedSubdivision::factor_polytope(const MixedCell& c, int i) const {
  return LatticePolytope::hull(factor_points(c, i));
}

LatticePolytope MixedSubdivision::cell_polytope(const MixedCell& c) const {
  std::vector<LatticePolytope> parts;
  for (int i = 0; i < system().size(); ++i) parts.push_back(factor_polytope(c, i));
  return minkowski_sum(parts);
}

std::vector<std::vector<std::vector<int>>> mixed_cells_from_minkowski_sum(
    const TropicalSystem& sys) {
  const int k = sys.size();
  // Configuration of distinct sums with lift = min over decompositions.
  std::map<std::vector<Int>, Rat> lift_of;
  std::vector<std::vector<int>> choice(static_cast<std::size_t>(k));
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  for (;;) {
    IVec sum = IVec::Zero(sys.ambient_dim());
    Rat lift = 0;
    for (int i = 0; i < k; ++i) {
      const auto& t = sys.poly(i).terms()[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      sum += t.exponent;
      lift += t.lift;
    }
    std::vector<Int> key(sum.data(), sum.data() + sum.size());
    auto it = lift_of.find(key);
    if (it == lift_of.end() || lift < it->second) lift_of[key] = lift;
    int i = 0;
    while (i < k && idx[static_cast<std::size_t>(i)] + 1 ==
                        static_cast<int>(sys.poly(i).terms().size())) {
      idx[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == k) break;
    ++idx[static_cast<std::size_t>(i)];
  }
  std::vector<IVec> pts;
  std::vector<Rat> lifts;
  for (const auto& [key, lift] : lift_of) {
    IVec p(static_cast<Index>(key.size()));
    for (std::size_t j = 0; j < key.size(); ++j) p(static_cast<Index>(j)) = key[j];
    pts.push_back(std::move(p));
    lifts.push_back(lift);
  }
  RegularSubdivision S = regular_subdivision(pts, lifts);

  // Each maximal cell lies on one non-vertical lower hyperplane
  // w = alpha . x + beta of the lifted sum configuration; the privileged
  // representation keeps, in each factor, the argmin of l_i(w) - alpha . w.
  std::vector<std::vector<std::vector<int>>> out;
  const Index n = sys.ambient_dim();
  for (const auto* cell : S.maximal_cells()) {
    QMat A(static_cast<Index>(cell->points.size()), n + 1);
    QVec b(static_cast<Index>(cell->points.size()));
    for (std::size_t r = 0; r < cell->points.size(); ++r) {
      int pi = cell->points[r];
      for (Index j = 0; j < n; ++j) A(static_cast<Index>(r), j) = Rat(pts[static_cast<std::size_t>(pi)](j));
      A(static_cast<Index>(r), n) = 1;
      b(static_cast<Index>(r)) = lifts[static_cast<std::size_t>(pi)];
    }
    auto fit = solve_rational_any(A, b);
    ensure(fit.has_value(), "mixed cells: cell points not on one lifted hyperplane");
    std::vector<std::vector<int>> rep(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      Rat best;
      bool first = true;
      std::vector<int> arg;
      for (std::size_t t = 0; t < sys.poly(i).terms().size(); ++t) {
        const auto& term = sys.poly(i).terms()[t];
        Rat v = term.lift;
        for (Index j = 0; j < n; ++j) v -= (*fit)(j)*Rat(term.exponent(j));
        if (first || v < best) {
          best = v;
          arg.assign(1, static_cast<int>(t));
          first = false;
        } else if (v == best) {
          arg.push_back(static_cast<int>(t));
        }
      }
      rep[static_cast<std::size_t>(i)] = std::move(arg);
    }
    out.push_back(std::move(rep));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<bool, bool> purity_flags(const MixedSubdivision& ms) {
  bool pure = true, tight = true;
  for (const auto* cell : ms.maximal_cells()) {
    int dim_sum = 0;
    for (int d : cell->factor_dims) dim_sum += d;
    if (dim_sum != cell->dim) {
      pure = false;
      tight = false;
      break;
    }
    for (int i = 0; i < ms.system().size(); ++i) {
      const auto& terms = cell->factor_terms[static_cast<std::size_t>(i)];
      if (static_cast<int>(terms.size()) !=
          cell->factor_dims[static_cast<std::size_t>(i)] + 1)
        tight = false;
    }
  }
  return {pure, tight};
}

bool is_nondegenerate_system(const TropicalSystem& sys) {
  return is_primitive_triangulation(cayley_trick(sys).cayley_subdivision());
}

std::vector<AdmissibleCollection> admissible_collections(const TropicalSystem& sys) {
  const Index n = sys.ambient_dim();
  const int k = sys.size();
  CayleyConfiguration conf = cayley_configuration(sys);
  LatticePolytope C = LatticePolytope::hull(conf.points);

  std::vector<AdmissibleCollection> out;
  std::map<std::pair<std::vector<int>, std::vector<std::vector<int>>>, bool> seen;
  for (const auto& face : C.faces()) {
    IVec u = C.ambient_face_functional(face);
    // global minimum of u over the configuration
    Int m;
    bool first = true;
    for (const auto& p : conf.points) {
      Int v = u.dot(p);
      if (first || v < m) m = v;
      first = false;
    }
    std::vector<int> factors;
    std::vector<std::vector<int>> face_terms;
    std::vector<int> face_dims;
    for (int i = 0; i < k; ++i) {
      std::vector<int> terms;
      for (std::size_t ci = 0; ci < conf.points.size(); ++ci) {
        if (conf.factor_of(static_cast<int>(ci)) != i) continue;
        if (u.dot(conf.points[ci]) == m) terms.push_back(conf.term_of(static_cast<int>(ci)));
      }
      if (terms.empty()) continue;
      factors.push_back(i);
      std::sort(terms.begin(), terms.end());
      std::vector<IVec> pts;
      for (int t : terms) pts.push_back(sys.poly(i).terms()[static_cast<std::size_t>(t)].exponent);
      IMat dirs(static_cast<Index>(pts.size()) - 1, n);
      for (std::size_t j = 1; j < pts.size(); ++j)
        dirs.row(static_cast<Index>(j - 1)) = (pts[j] - pts[0]).transpose();
      face_dims.push_back(static_cast<int>(rank(dirs)));
      face_terms.push_back(std::move(terms));
    }
    ensure(!factors.empty(), "admissible_collections: face with no markers");
    if (!seen.emplace(std::make_pair(factors, face_terms), true).second) continue;
    out.push_back({factors, face_terms, face_dims});
  }
  std::sort(out.begin(), out.end(), [](const AdmissibleCollection& a, const AdmissibleCollection& b) {
    if (a.factors != b.factors) return a.factors < b.factors;
    return a.face_terms < b.face_terms;
  });
  return out;
}

bool is_admissible(const TropicalSystem& sys, const std::vector<int>& factors,
                   const std::vector<std::vector<int>>& face_terms) {
  if (factors.empty() || factors.size() != face_terms.size()) return false;
  // Each Gamma_i must be a face of Delta_i ...
  std::vector<LatticePolytope> gammas;
  for (std::size_t idx = 0; idx < factors.size(); ++idx) {
    int i = factors[idx];
    const auto& delta = sys.poly(i).newton_polytope();
    std::vector<IVec> pts;
    for (int t : face_terms[idx])
      pts.push_back(sys.poly(i).terms()[static_cast<std::size_t>(t)].exponent);
    if (pts.empty()) return false;
    LatticePolytope G = LatticePolytope::hull(pts);
    bool found = false;
    for (const auto& f : delta.faces()) {
      std::vector<IVec> fverts;
      for (int v : f.verts) fverts.push_back(delta.vertices()[static_cast<std::size_t>(v)]);
      if (LatticePolytope::hull(fverts) == G) {
        // the term set must be exactly the support on the face
        std::vector<int> expected;
        for (std::size_t t = 0; t < sys.poly(i).terms().size(); ++t)
          if (delta.face_contains_point(f, sys.poly(i).terms()[t].exponent))
            expected.push_back(static_cast<int>(t));
        found = (expected == face_terms[idx]);
        break;
      }
    }
    if (!found) return false;
    gammas.push_back(std::move(G));
  }
  // ... and their sum must be a face of the sum of the Delta_i.
  std::vector<LatticePolytope> deltas;
  for (int i : factors) deltas.push_back(sys.poly(i).newton_polytope());
  LatticePolytope D = minkowski_sum(deltas);
  LatticePolytope G = minkowski_sum(gammas);
  for (const auto& f : D.faces()) {
    std::vector<IVec> fverts;
    for (int v : f.verts) fverts.push_back(D.vertices()[static_cast<std::size_t>(v)]);
    if (LatticePolytope::hull(fverts) == G) return true;
  }
  return false;
}

FaceSystem face_system(const TropicalSystem& sys, const AdmissibleCollection& adm) {
  require(is_admissible(sys, adm.factors, adm.face_terms), "face_system: non-admissible collection");
  const Index n = sys.ambient_dim();
  // Saturated basis of M(sum Gamma_i).
  std::vector<IVec> dirs;
  for (std::size_t idx = 0; idx < adm.factors.size(); ++idx) {
    int i = adm.factors[idx];
    const auto& terms = adm.face_terms[idx];
    const IVec& base = sys.poly(i).terms()[static_cast<std::size_t>(terms[0])].exponent;
    for (std::size_t j = 1; j < terms.size(); ++j)
      dirs.push_back(sys.poly(i).terms()[static_cast<std::size_t>(terms[j])].exponent - base);
  }
  IMat m(static_cast<Index>(dirs.size()), n);
  for (Index r = 0; r < m.rows(); ++r) m.row(r) = dirs[static_cast<std::size_t>(r)].transpose();
  IMat basis = saturation(m);
  const Index d = basis.rows();

  QMat bt(n, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < n; ++j) bt(j, i) = Rat(basis(i, j));

  std::vector<TropicalPolynomial> polys;
  std::vector<std::vector<int>> term_maps;
  for (std::size_t idx = 0; idx < adm.factors.size(); ++idx) {
    int i = adm.factors[idx];
    const auto& terms = adm.face_terms[idx];
    const IVec& base = sys.poly(i).terms()[static_cast<std::size_t>(terms[0])].exponent;
    std::vector<TropicalTerm> newterms;
    for (int t : terms) {
      const auto& src = sys.poly(i).terms()[static_cast<std::size_t>(t)];
      IVec diff = src.exponent - base;
      IVec c(d);
      if (d > 0) {
        QVec rhs(n);
        for (Index j = 0; j < n; ++j) rhs(j) = Rat(diff(j));
        auto sol = solve_rational(bt, rhs);
        ensure(sol.has_value(), "face_system: coordinate failure");
        for (Index r = 0; r < d; ++r) {
          Rat v = (*sol)(r);
          v.canonicalize();
          ensure(v.get_den() == 1, "face_system: non-integral coordinate");
          c(r) = v.get_num();
        }
      }
      newterms.push_back({c, src.lift, src.sign});
    }
    polys.emplace_back(d, std::move(newterms));
    term_maps.push_back(terms);
  }
  return {TropicalSystem(std::move(polys)), std::move(term_maps), basis};
}

DeltaFaces minkowski_face_decompositions(const TropicalSystem& sys) {
  const int k = sys.size();
  DeltaFaces out{delta_of(sys), {}};
  for (const auto& face : out.delta.faces()) {
    IVec u = out.delta.ambient_face_functional(face);
    DeltaFaceDecomposition dec;
    dec.face = &face;
    for (int i = 0; i < k; ++i) {
      Int mn;
      bool first = true;
      for (const auto& t : sys.poly(i).terms()) {
        Int v = u.dot(t.exponent);
        if (first || v < mn) mn = v;
        first = false;
      }
      std::vector<int> terms;
      std::vector<IVec> pts;
      for (std::size_t t = 0; t < sys.poly(i).terms().size(); ++t)
        if (u.dot(sys.poly(i).terms()[t].exponent) == mn) {
          terms.push_back(static_cast<int>(t));
          pts.push_back(sys.poly(i).terms()[t].exponent);
        }
      IMat dirs(static_cast<Index>(pts.size()) - 1, sys.ambient_dim());
      for (std::size_t j = 1; j < pts.size(); ++j)
        dirs.row(static_cast<Index>(j - 1)) = (pts[j] - pts[0]).transpose();
      dec.face_dims.push_back(static_cast<int>(rank(dirs)));
      dec.face_terms.push_back(std::move(terms));
    }
    out.decompositions.push_back(std::move(dec));
  }
  return out;
}

} // namespace trop
