#include "trop/polytope.hpp"

#include <algorithm>
#include <numeric>

namespace trop {

std::vector<IVec> dedup_points(std::vector<IVec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

namespace {

IMat stack_rows(const std::vector<IVec>& rows, Index cols) {
  IMat m(static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) m.row(i) = rows[i].transpose();
  return m;
}

// Integer coordinates of (p - base) in the saturated row basis B.
std::optional<IVec> coords_in(const IMat& basis, const IVec& base, const IVec& p) {
  const Index d = basis.rows();
  IVec diff = p - base;
  if (d == 0) {
    for (Index j = 0; j < diff.size(); ++j)
      if (diff(j) != 0) return std::nullopt;
    return IVec(0);
  }
  QMat bt(basis.cols(), d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < basis.cols(); ++j) bt(j, i) = Rat(basis(i, j));
  QVec rhs(diff.size());
  for (Index j = 0; j < diff.size(); ++j) rhs(j) = Rat(diff(j));
  auto sol = solve_rational(bt, rhs);
  if (!sol) return std::nullopt;
  IVec c(d);
  for (Index i = 0; i < d; ++i) {
    Rat v = (*sol)(i);
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    c(i) = v.get_num();
  }
  return c;
}

struct BitSet {
  std::vector<std::uint64_t> w;
  explicit BitSet(std::size_t n) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  void intersect(const BitSet& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
};

// Enumerates supporting hyperplanes through point subsets of size d; exact
// and adequate for desk-scale configurations.
struct HyperplaneHull {
  const std::vector<IVec>& pts; // full-dimensional coordinates, dim d
  Index d;
  struct HFacet {
    IVec normal;
    Int offset;
    std::vector<int> members; // every input point on the facet
  };
  std::vector<HFacet> facets;

  explicit HyperplaneHull(const std::vector<IVec>& coords, Index dim) : pts(coords), d(dim) {
    run();
  }

  void run() {
    const int n = static_cast<int>(pts.size());
    std::map<std::pair<std::vector<Int>, Int>, int> seen;
    std::vector<BitSet> member_masks;
    std::vector<int> idx(static_cast<std::size_t>(d));
    std::iota(idx.begin(), idx.end(), 0);
    if (static_cast<Index>(n) < d) ensure(false, "hull: too few points for dimension");
    for (;;) {
      process_subset(idx, n, seen, member_masks);
      // next combination
      Index i = d - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - static_cast<int>(d - i)) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (Index j = i + 1; j < d; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    ensure(!facets.empty(), "hull: no supporting hyperplanes found");
  }

  void process_subset(const std::vector<int>& idx, int n,
                      std::map<std::pair<std::vector<Int>, Int>, int>& seen,
                      std::vector<BitSet>& member_masks) {
    if (!facets.empty()) {
      // Skip subsets contained in an already-discovered facet.
      BitSet common = point_mask(idx[0], member_masks);
      for (std::size_t j = 1; j < idx.size() && common.any(); ++j)
        common.intersect(point_mask(idx[j], member_masks));
      if (common.any()) return;
    }
    IMat edges(d - 1, d);
    for (Index j = 1; j < d; ++j)
      edges.row(j - 1) =
          (pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] -
           pts[static_cast<std::size_t>(idx[0])])
              .transpose();
    IMat ker = integer_kernel(edges);
    if (ker.rows() != 1) return; // affinely dependent subset
    IVec h = ker.row(0).transpose();
    Int b = h.dot(pts[static_cast<std::size_t>(idx[0])]);
    bool le = true, ge = true;
    for (int i = 0; i < n && (le || ge); ++i) {
      int c = cmp(h.dot(pts[static_cast<std::size_t>(i)]), b);
      if (c > 0) le = false;
      if (c < 0) ge = false;
    }
    if (!le && !ge) return;
    if (!le) { // flip so that h.x <= b holds on the hull
      h = -h;
      b = -b;
    }
    std::vector<Int> key(h.data(), h.data() + h.size());
    if (seen.emplace(std::make_pair(std::move(key), b), 1).second) {
      HFacet f;
      f.normal = h;
      f.offset = b;
      BitSet mask(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        if (h.dot(pts[static_cast<std::size_t>(i)]) == b) {
          f.members.push_back(i);
          mask.set(static_cast<std::size_t>(i));
        }
      facets.push_back(std::move(f));
      member_masks.push_back(std::move(mask));
    }
  }

  BitSet point_mask(int point, const std::vector<BitSet>& member_masks) const {
    BitSet m(facets.size() == 0 ? 1 : facets.size());
    m.w.assign((facets.size() + 63) / 64, 0);
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (member_masks[f].test(static_cast<std::size_t>(point))) m.set(f);
    return m;
  }
};

int affine_rank(const std::vector<IVec>& pts) {
  if (pts.empty()) return -1;
  IMat dirs(static_cast<Index>(pts.size()) - 1, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    dirs.row(static_cast<Index>(i - 1)) = (pts[i] - pts[0]).transpose();
  return static_cast<int>(rank(dirs));
}

} // namespace

LatticePolytope LatticePolytope::hull(const std::vector<IVec>& points) {
  require(!points.empty(), "hull: empty point list");
  const Index n = points[0].size();
  for (const auto& p : points)
    require(p.size() == n, "hull: inconsistent point dimensions");

  LatticePolytope P;
  P.ambient_dim_ = n;
  std::vector<IVec> pts = dedup_points(points);

  P.base_ = pts[0];
  IMat dirs(static_cast<Index>(pts.size()) - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i)
    dirs.row(static_cast<Index>(i - 1)) = (pts[i] - P.base_).transpose();
  P.basis_ = saturation(dirs);
  P.dim_ = static_cast<int>(P.basis_.rows());

  std::vector<IVec> coords(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto c = coords_in(P.basis_, P.base_, pts[i]);
    ensure(c.has_value(), "hull: saturated coordinates must be integral");
    coords[i] = *c;
  }

  if (P.dim_ == 0) {
    P.verts_ = {pts[0]};
    P.averts_ = {IVec(0)};
    Face full;
    full.verts = {0};
    full.dim = 0;
    P.faces_ = {full};
    return P;
  }

  HyperplaneHull hh(coords, P.dim_);

  // Vertices: points whose active facet normals span the full dimension.
  std::vector<int> vertex_of(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IVec> active;
    for (const auto& f : hh.facets)
      if (f.normal.dot(coords[i]) == f.offset) active.push_back(f.normal);
    if (active.empty()) continue;
    if (rank(stack_rows(active, P.dim_)) == P.dim_) vertex_of[i] = 0;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (vertex_of[i] == 0) {
      vertex_of[i] = static_cast<int>(P.verts_.size());
      P.verts_.push_back(pts[i]);
      P.averts_.push_back(coords[i]);
    }
  }
  ensure(!P.verts_.empty(), "hull: vertex detection failed");

  for (const auto& f : hh.facets) {
    Facet g;
    g.normal = f.normal;
    g.offset = f.offset;
    for (int m : f.members)
      if (vertex_of[static_cast<std::size_t>(m)] >= 0)
        g.verts.push_back(vertex_of[static_cast<std::size_t>(m)]);
    std::sort(g.verts.begin(), g.verts.end());
    P.facets_.push_back(std::move(g));
  }

  // Face lattice: close the vertex sets under intersection with facets.
  std::map<std::vector<int>, std::vector<int>> face_facets; // verts -> facet ids
  std::vector<int> all(P.verts_.size());
  std::iota(all.begin(), all.end(), 0);
  face_facets[all] = {};
  std::vector<std::vector<int>> frontier = {all};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& fv : frontier) {
      for (std::size_t fi = 0; fi < P.facets_.size(); ++fi) {
        std::vector<int> inter;
        std::set_intersection(fv.begin(), fv.end(), P.facets_[fi].verts.begin(),
                              P.facets_[fi].verts.end(), std::back_inserter(inter));
        if (inter.empty()) continue;
        if (face_facets.find(inter) == face_facets.end()) {
          face_facets[inter] = {};
          next.push_back(inter);
        }
      }
    }
    frontier = std::move(next);
  }
  for (auto& [verts, fids] : face_facets) {
    for (std::size_t fi = 0; fi < P.facets_.size(); ++fi) {
      if (std::includes(P.facets_[fi].verts.begin(), P.facets_[fi].verts.end(),
                        verts.begin(), verts.end()))
        fids.push_back(static_cast<int>(fi));
    }
  }
  for (auto& [verts, fids] : face_facets) {
    Face f;
    f.verts = verts;
    f.facets = fids;
    std::vector<IVec> sub;
    for (int v : verts) sub.push_back(P.averts_[static_cast<std::size_t>(v)]);
    f.dim = affine_rank(sub);
    P.faces_.push_back(std::move(f));
  }
  std::sort(P.faces_.begin(), P.faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });
  return P;
}

std::vector<const LatticePolytope::Face*> LatticePolytope::faces_of_dim(int d) const {
  std::vector<const Face*> out;
  for (const auto& f : faces_)
    if (f.dim == d) out.push_back(&f);
  return out;
}

const LatticePolytope::Face& LatticePolytope::full_face() const {
  ensure(!faces_.empty() && faces_.back().dim == dim_, "face lattice missing top face");
  return faces_.back();
}

std::optional<IVec> LatticePolytope::affine_coords(const IVec& p) const {
  require(p.size() == ambient_dim_, "affine_coords: dimension mismatch");
  return coords_in(basis_, base_, p);
}

bool LatticePolytope::contains(const IVec& p) const {
  auto c = affine_coords(p);
  if (!c) return false;
  for (const auto& f : facets_)
    if (f.normal.dot(*c) > f.offset) return false;
  return true;
}

bool LatticePolytope::coords_on_face(const Face& f, const IVec& coords) const {
  for (int fi : f.facets)
    if (facets_[static_cast<std::size_t>(fi)].normal.dot(coords) !=
        facets_[static_cast<std::size_t>(fi)].offset)
      return false;
  return true;
}

bool LatticePolytope::face_contains_point(const Face& f, const IVec& p) const {
  auto c = affine_coords(p);
  if (!c) return false;
  for (const auto& g : facets_)
    if (g.normal.dot(*c) > g.offset) return false;
  return coords_on_face(f, *c);
}

std::vector<int> LatticePolytope::argmin_vertices(const IVec& u) const {
  require(u.size() == ambient_dim_, "argmin_vertices: dimension mismatch");
  std::vector<int> out;
  Int best;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    Int v = u.dot(verts_[i]);
    if (out.empty() || v < best) {
      best = v;
      out.assign(1, static_cast<int>(i));
    } else if (v == best) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

const LatticePolytope::Face& LatticePolytope::face_from_vertex_set(
    const std::vector<int>& verts) const {
  for (const auto& f : faces_)
    if (f.verts == verts) return f;
  throw ValidationError("face_from_vertex_set: not a face of the polytope");
}

const IVec& LatticePolytope::ambient_facet_functional(int facet_id) const {
  ensure(facet_id >= 0 && facet_id < static_cast<int>(facets_.size()),
         "bad facet id");
  if (ambient_facet_functionals_.empty()) {
    ambient_facet_functionals_.resize(facets_.size());
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
      // Facet normals satisfy normal . c <= offset on P, so -normal attains
      // its minimum on the facet; solve basis * a = -normal for an ambient
      // representative.
      const IVec h = -facets_[fi].normal;
      QMat B = to_rational(basis_);
      QVec rhs(h.size());
      for (Index j = 0; j < h.size(); ++j) rhs(j) = Rat(h(j));
      auto a = solve_rational_any(B, rhs);
      ensure(a.has_value(), "facet functional: inconsistent system");
      Int den = 1;
      for (Index j = 0; j < a->size(); ++j) {
        Rat v = (*a)(j);
        v.canonicalize();
        den = lcm(den, v.get_den());
      }
      IVec amb(ambient_dim_);
      for (Index j = 0; j < a->size(); ++j) {
        Rat v = (*a)(j)*Rat(den);
        v.canonicalize();
        amb(j) = v.get_num();
      }
      ambient_facet_functionals_[fi] = amb;
    }
  }
  return ambient_facet_functionals_[static_cast<std::size_t>(facet_id)];
}

IVec LatticePolytope::ambient_face_functional(const Face& f) const {
  IVec u = IVec::Zero(ambient_dim_);
  for (int fi : f.facets) u += ambient_facet_functional(fi);
  return u;
}

bool LatticePolytope::in_boundary(const std::vector<IVec>& pts) const {
  if (dim_ == 0) return false;
  std::vector<IVec> cs;
  for (const auto& p : pts) {
    auto c = affine_coords(p);
    ensure(c.has_value(), "in_boundary: point outside the affine hull");
    cs.push_back(*c);
  }
  for (const auto& f : facets_) {
    bool all = true;
    for (const auto& c : cs)
      if (f.normal.dot(c) != f.offset) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

const std::vector<std::vector<int>>& LatticePolytope::triangulation() const {
  if (!triangulation_.empty() || dim_ < 0) return triangulation_;
  if (dim_ == 0) {
    triangulation_ = {{0}};
    return triangulation_;
  }
  // Cone from vertex 0 over triangulated facets avoiding it.
  for (const auto& fct : facets_) {
    if (std::find(fct.verts.begin(), fct.verts.end(), 0) != fct.verts.end()) continue;
    std::vector<IVec> fpts;
    for (int v : fct.verts) fpts.push_back(verts_[static_cast<std::size_t>(v)]);
    LatticePolytope F = hull(fpts);
    for (const auto& s : F.triangulation()) {
      std::vector<int> simplex = {0};
      for (int v : s) {
        // map the facet-local vertex back to our index
        const IVec& pt = F.vertices()[static_cast<std::size_t>(v)];
        auto it = std::find(verts_.begin(), verts_.end(), pt);
        ensure(it != verts_.end(), "triangulation: vertex mapping failed");
        simplex.push_back(static_cast<int>(it - verts_.begin()));
      }
      std::sort(simplex.begin(), simplex.end());
      triangulation_.push_back(std::move(simplex));
    }
  }
  ensure(!triangulation_.empty(), "triangulation failed");
  return triangulation_;
}

Int LatticePolytope::normalized_volume() const {
  if (dim_ == 0) return 1;
  Int total = 0;
  for (const auto& s : triangulation()) {
    IMat e(dim_, dim_);
    for (int j = 1; j <= dim_; ++j)
      e.row(j - 1) = (averts_[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])] -
                      averts_[static_cast<std::size_t>(s[0])])
                         .transpose();
    total += abs(determinant(e));
  }
  return total;
}

LatticePolytope LatticePolytope::restricted() const {
  std::vector<IVec> pts;
  for (const auto& c : averts_) pts.push_back(c);
  if (dim_ == 0) {
    IVec zero = IVec::Zero(0);
    return hull({zero});
  }
  return hull(pts);
}

LatticePolytope LatticePolytope::dilate(const Int& factor) const {
  require(factor >= 0, "dilate: negative factor");
  LatticePolytope P = *this;
  if (factor == 0) {
    IVec origin = IVec::Zero(ambient_dim_);
    return hull({origin});
  }
  for (auto& v : P.verts_) v *= factor;
  for (auto& c : P.averts_) c *= factor;
  P.base_ = base_ * factor;
  for (auto& f : P.facets_) f.offset *= factor;
  // combinatorics (faces, triangulation) are unchanged by dilation
  return P;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  require(p.ambient_dim() == q.ambient_dim(), "minkowski_sum: dimension mismatch");
  std::vector<IVec> sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return LatticePolytope::hull(sums);
}

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps) {
  require(!ps.empty(), "minkowski_sum: empty list");
  LatticePolytope acc = ps[0];
  for (std::size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]);
  return acc;
}

Int normalized_volume(const LatticePolytope& p) { return p.normalized_volume(); }

Rat euclidean_volume(const LatticePolytope& p, const IMat& ref) {
  const Index l = ref.rows();
  if (p.dim() < static_cast<int>(l)) return 0;
  ensure(p.dim() == static_cast<int>(l), "euclidean_volume: polytope exceeds reference rank");
  // Coordinates of vertices relative to vertex 0 in the reference basis.
  QMat bt(ref.cols(), l);
  for (Index i = 0; i < l; ++i)
    for (Index j = 0; j < ref.cols(); ++j) bt(j, i) = Rat(ref(i, j));
  std::vector<IVec> rc(p.vertices().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    IVec diff = p.vertices()[i] - p.vertices()[0];
    QVec rhs(diff.size());
    for (Index j = 0; j < diff.size(); ++j) rhs(j) = Rat(diff(j));
    auto sol = solve_rational(bt, rhs);
    require(sol.has_value(), "euclidean_volume: edge outside reference span");
    IVec c(l);
    for (Index j = 0; j < l; ++j) {
      Rat v = (*sol)(j);
      v.canonicalize();
      require(v.get_den() == 1, "euclidean_volume: edge outside reference lattice");
      c(j) = v.get_num();
    }
    rc[i] = c;
  }
  Int total = 0;
  for (const auto& s : p.triangulation()) {
    IMat e(l, l);
    for (Index j = 1; j <= static_cast<Index>(l); ++j)
      e.row(j - 1) = (rc[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])] -
                      rc[static_cast<std::size_t>(s[0])])
                         .transpose();
    total += abs(determinant(e));
  }
  Rat vol(total);
  vol /= Rat(factorial(static_cast<unsigned long>(l)));
  return vol;
}

Rat mixed_volume(const std::vector<LatticePolytope>& ps, const std::vector<int>& t,
                 const IMat* ref) {
  require(!ps.empty() && ps.size() == t.size(), "mixed_volume: size mismatch");
  const Index n = ps[0].ambient_dim();
  for (const auto& p : ps) require(p.ambient_dim() == n, "mixed_volume: dimension mismatch");
  for (int ti : t) require(ti >= 0, "mixed_volume: negative multiplicity");

  IMat reference;
  if (ref) {
    reference = *ref;
  } else {
    std::vector<IVec> dirs;
    for (const auto& p : ps)
      for (const auto& v : p.vertices()) dirs.push_back(v - p.vertices()[0]);
    reference = saturation(stack_rows(dirs, n));
  }
  const Index l = reference.rows();
  long total = 0;
  for (int ti : t) total += ti;
  require(total == static_cast<long>(l), "mixed_volume: multiplicities must sum to the reference rank");

  // Exact finite differences of the volume polynomial over the grid.
  std::vector<int> s(t.size(), 0);
  Rat mv = 0;
  for (;;) {
    long ssum = 0;
    for (int si : s) ssum += si;
    std::vector<LatticePolytope> scaled;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (s[i] > 0) scaled.push_back(ps[i].dilate(Int(s[i])));
    Rat vol = 0;
    if (!scaled.empty()) {
      LatticePolytope sum = minkowski_sum(scaled);
      vol = euclidean_volume(sum, reference);
    }
    Int coeff = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
      coeff *= binomial(static_cast<unsigned long>(t[i]), static_cast<unsigned long>(s[i]));
    if ((total - ssum) % 2 != 0) coeff = -coeff;
    mv += Rat(coeff) * vol;
    // next grid point
    std::size_t i = 0;
    while (i < s.size() && s[i] == t[i]) {
      s[i] = 0;
      ++i;
    }
    if (i == s.size()) break;
    ++s[i];
  }
  return mv;
}

namespace {

// Enumerate integer points c in the frame of P with facet slacks scaled by
// lambda, calling fn(c).  Visits the lattice points of lambda * P.
template <typename F>
void enumerate_dilate(const LatticePolytope& p, const Int& lambda, bool strict, F&& fn) {
  const int d = p.dim();
  if (d == 0) {
    fn(IVec(0)); // a point is its own relative interior
    return;
  }
  IVec lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    Int mn = p.vertex_coords()[0](j), mx = mn;
    for (const auto& c : p.vertex_coords()) {
      mn = std::min(mn, Int(c(j)));
      mx = std::max(mx, Int(c(j)));
    }
    lo(j) = mn * lambda;
    hi(j) = mx * lambda;
    if (lambda == 0) {
      lo(j) = 0;
      hi(j) = 0;
    }
  }
  IVec c = lo;
  if (lambda == 0) {
    // the dilate is the origin of the frame
    bool ok = !strict;
    if (ok) fn(IVec::Zero(d));
    return;
  }
  for (;;) {
    bool inside = true;
    for (const auto& f : p.facets()) {
      Int v = f.normal.dot(c);
      Int bound = f.offset * lambda;
      if (strict ? !(v < bound) : !(v <= bound)) {
        inside = false;
        break;
      }
    }
    if (inside) fn(c);
    int j = 0;
    while (j < d && c(j) == hi(j)) {
      c(j) = lo(j);
      ++j;
    }
    if (j == d) break;
    c(j) += 1;
  }
}

} // namespace

std::vector<IVec> lattice_points(const LatticePolytope& p) {
  std::vector<IVec> out;
  enumerate_dilate(p, 1, false, [&](const IVec& c) {
    IVec x = p.base();
    if (p.dim() > 0) x += p.basis().transpose() * c;
    out.push_back(x);
  });
  return dedup_points(out);
}

Int count_dilate(const LatticePolytope& p, const Int& lambda) {
  require(lambda >= 0, "count_dilate: negative dilation");
  Int count = 0;
  enumerate_dilate(p, lambda, false, [&](const IVec&) { ++count; });
  return count;
}

Int count_dilate_interior(const LatticePolytope& p, const Int& lambda) {
  require(lambda >= 0, "count_dilate_interior: negative dilation");
  if (lambda == 0) return 0; // the apex of the cone is not interior
  Int count = 0;
  enumerate_dilate(p, lambda, true, [&](const IVec&) { ++count; });
  return count;
}

Rat EhrhartPolynomial::eval(const Int& lambda) const {
  Rat acc = 0;
  Rat pow = 1;
  for (const auto& c : a) {
    acc += c * pow;
    pow *= Rat(lambda);
  }
  return acc;
}

EhrhartPolynomial ehrhart(const LatticePolytope& p) {
  const int n = static_cast<int>(p.ambient_dim());
  require(p.dim() == n, "ehrhart: polytope must be full-dimensional (restrict first)");
  QMat vand(n + 1, n + 1);
  QVec counts(n + 1);
  for (int lam = 0; lam <= n; ++lam) {
    Rat pw = 1;
    for (int l = 0; l <= n; ++l) {
      vand(lam, l) = pw;
      pw *= lam;
    }
    counts(lam) = Rat(count_dilate(p, lam));
  }
  auto sol = solve_rational(vand, counts);
  ensure(sol.has_value(), "ehrhart: Vandermonde solve failed");
  EhrhartPolynomial e;
  e.a.assign(static_cast<std::size_t>(n + 1), Rat(0));
  for (int l = 0; l <= n; ++l) e.a[static_cast<std::size_t>(l)] = (*sol)(l);
  ensure(e.a[0] == 1, "ehrhart: constant term must be 1");
  return e;
}

std::vector<Int> psi_coefficients(const EhrhartPolynomial& e) {
  const int n = e.degree();
  std::vector<Int> psi;
  for (int i = 0; i <= n; ++i) {
    Rat acc = 0;
    for (int l = 0; l <= n; ++l) {
      Int inner = 0;
      for (int pp = 0; pp <= i; ++pp) {
        Int term = binomial(static_cast<unsigned long>(n + 1),
                            static_cast<unsigned long>(i - pp)) *
                   ipow(pp, static_cast<unsigned long>(l));
        if ((i - pp) % 2 != 0) term = -term;
        inner += term;
      }
      acc += Rat(inner) * e.a[static_cast<std::size_t>(l)];
    }
    psi.push_back(rat_to_int(acc, "psi_coefficients"));
  }
  ensure(psi[0] == 1, "psi_0 must equal 1");
  return psi;
}

std::vector<Int> psi_coefficients(const LatticePolytope& p) {
  return psi_coefficients(ehrhart(p));
}

bool cone_series_check(const LatticePolytope& p, int depth) {
  const int n = static_cast<int>(p.ambient_dim());
  require(p.dim() == n, "cone_series_check: polytope must be full-dimensional");
  require(depth >= n + 1, "cone_series_check: depth must be at least n+1");
  std::vector<Int> counts, interior;
  for (int lam = 0; lam <= depth; ++lam) {
    counts.push_back(count_dilate(p, lam));
    interior.push_back(count_dilate_interior(p, lam));
  }
  auto series_coeff = [&](const std::vector<Int>& c, int i) {
    Int acc = 0;
    for (int j = 0; j <= std::min(i, n + 1); ++j) {
      Int term = binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(j)) *
                 c[static_cast<std::size_t>(i - j)];
      if (j % 2 != 0) term = -term;
      acc += term;
    }
    return acc;
  };
  std::vector<Int> psi = psi_coefficients(p);
  for (int i = 0; i <= depth; ++i) {
    Int s = series_coeff(counts, i);
    Int expected = (i <= n) ? psi[static_cast<std::size_t>(i)] : Int(0);
    if (s != expected) return false;
  }
  // duality S(C,t) = t^{n+1} T(C, 1/t): psi_i must equal tau_{n+1-i}.
  for (int j = 0; j <= depth; ++j) {
    Int tau = series_coeff(interior, j);
    Int expected = 0;
    if (j <= n + 1 && n + 1 - j <= n) expected = psi[static_cast<std::size_t>(n + 1 - j)];
    if (tau != expected) return false;
  }
  return true;
}

} // namespace trop
