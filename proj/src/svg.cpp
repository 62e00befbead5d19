#include "trop/svg.hpp"

#include "trop/multiplicity.hpp"
#include "trop/tropical.hpp"

#include <algorithm>
#include <sstream>

namespace trop {

namespace {

struct Segment {
  QVec a, b;
  int color;
};

struct Marker {
  QVec at;
  Int weight;
};

// The supporting functional of Delta on the facet containing a boundary
// edge of the dual subdivision gives the ray direction.
IVec ray_direction(const LatticePolytope& delta, const std::vector<IVec>& edge_pts) {
  for (std::size_t fi = 0; fi < delta.facets().size(); ++fi) {
    bool on = true;
    for (const auto& p : edge_pts) {
      auto c = delta.affine_coords(p);
      ensure(c.has_value(), "ray_direction: point outside Newton polytope");
      if (delta.facets()[fi].normal.dot(*c) != delta.facets()[fi].offset) on = false;
    }
    if (on) {
      // outward direction: the facet maximizes its frame normal, and the
      // ambient functional below is minimized there, so rays go along its
      // negative.
      return -delta.ambient_facet_functional(static_cast<int>(fi));
    }
  }
  throw InternalError("ray_direction: boundary edge not on a facet");
}

// largest t >= 0 with p + t d inside the box; nonpositive when the ray
// leaves immediately or p lies outside along a frozen coordinate
Rat clip_ray(const QVec& p, const IVec& d, const std::array<Rat, 4>& box) {
  Rat tmax;
  bool unbounded = true;
  bool outside = false;
  auto apply = [&](const Rat& coord, const Int& dir, const Rat& lo, const Rat& hi) {
    if (dir == 0) {
      if (coord < lo || coord > hi) outside = true;
      return;
    }
    Rat bound = (dir > 0) ? Rat((hi - coord) / Rat(dir)) : Rat((lo - coord) / Rat(dir));
    if (unbounded || bound < tmax) {
      tmax = bound;
      unbounded = false;
    }
  };
  apply(p(0), d(0), box[0], box[2]);
  apply(p(1), d(1), box[1], box[3]);
  if (outside || unbounded) return Rat(-1);
  return tmax;
}

std::string fmt(const Rat& v) {
  // exact fixed-point with three decimals, deterministic
  Rat scaled = v * 1000;
  Int num = scaled.get_num(), den = scaled.get_den();
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // round to nearest (ties toward even are irrelevant for determinism)
  Rat frac = scaled - Rat(q);
  if (frac >= Rat(1, 2)) q += 1;
  bool neg = q < 0;
  Int a = abs(q);
  Int whole = a / 1000, milli = a % 1000;
  std::ostringstream os;
  if (neg && (whole != 0 || milli != 0)) os << '-';
  os << whole.get_str() << '.';
  std::string m = milli.get_str();
  os << std::string(3 - m.size(), '0') << m;
  return os.str();
}

const char* palette(int i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b"};
  return colors[i % 6];
}

} // namespace

std::string emit_svg(const TropicalSystem& sys, const SvgOptions& opts) {
  require(sys.ambient_dim() == 2, "emit_svg: plane curves only (n = 2)");

  std::vector<Segment> bounded;
  std::vector<std::pair<QVec, IVec>> rays; // base, direction
  std::vector<int> ray_colors;
  std::vector<Marker> markers;
  std::vector<QVec> anchors;

  for (int i = 0; i < sys.size(); ++i) {
    const auto& f = sys.poly(i);
    auto data = dual_subdivision(f);
    const auto& delta = f.newton_polytope();
    if (delta.dim() == 0) continue; // monomial: empty curve
    if (delta.dim() == 1) {
      // each maximal dual cell is dual to a full line
      for (const auto* cell : data.dual.maximal_cells()) {
        // direction orthogonal to the edge of the support
        const auto& t0 = f.terms()[static_cast<std::size_t>(cell->points[0])];
        const auto& t1 = f.terms()[static_cast<std::size_t>(cell->points[1])];
        IVec e = t1.exponent - t0.exponent;
        IVec d(2);
        d(0) = -e(1);
        d(1) = e(0);
        // a point on the line: x . e = l1 - l0 scaled
        Rat rhs = t1.lift - t0.lift;
        QVec p(2);
        Rat ee = Rat(e.dot(e));
        p(0) = Rat(e(0)) * rhs / ee;
        p(1) = Rat(e(1)) * rhs / ee;
        rays.emplace_back(p, d);
        ray_colors.push_back(i);
        IVec dneg = -d;
        rays.emplace_back(p, dneg);
        ray_colors.push_back(i);
        anchors.push_back(p);
      }
      continue;
    }
    // vertices of the curve <-> maximal dual cells
    std::map<std::vector<int>, QVec> vertex_of;
    for (const auto* cell : data.dual.maximal_cells()) {
      QVec v = vertex_coordinates(data, *cell);
      vertex_of[cell->points] = v;
      anchors.push_back(v);
    }
    for (const auto& face : data.dual.faces()) {
      if (face.dim != 1) continue;
      // maximal cells containing this edge
      std::vector<const SubFace*> adj;
      for (const auto* cell : data.dual.maximal_cells())
        if (std::includes(cell->points.begin(), cell->points.end(), face.points.begin(),
                          face.points.end()))
          adj.push_back(cell);
      if (face.interior) {
        ensure(adj.size() == 2, "interior dual edge must bound two cells");
        bounded.push_back({vertex_of[adj[0]->points], vertex_of[adj[1]->points], i});
      } else {
        ensure(adj.size() == 1, "boundary dual edge must bound one cell");
        std::vector<IVec> edge_pts;
        for (int p : face.points) edge_pts.push_back(f.terms()[static_cast<std::size_t>(p)].exponent);
        rays.emplace_back(vertex_of[adj[0]->points], ray_direction(delta, edge_pts));
        ray_colors.push_back(i);
      }
    }
  }

  // stable intersection points for systems of two or more curves
  if (sys.size() >= 2) {
    MixedSubdivision ms = cayley_trick(sys);
    for (const auto& cell : ms.cells()) {
      if (cell.dim != 2) continue;
      bool positive = true;
      for (int d : cell.factor_dims)
        if (d == 0) positive = false;
      if (!positive) continue;
      Int w = weight_general(ms, cell).weight;
      if (w == 0) continue;
      // the dual point: x . w - l equal within every factor
      std::vector<std::pair<IVec, Rat>> eqs;
      for (int i = 0; i < sys.size(); ++i) {
        const auto& terms = cell.factor_terms[static_cast<std::size_t>(i)];
        const auto& t0 = sys.poly(i).terms()[static_cast<std::size_t>(terms[0])];
        for (std::size_t j = 1; j < terms.size(); ++j) {
          const auto& tj = sys.poly(i).terms()[static_cast<std::size_t>(terms[j])];
          eqs.emplace_back(tj.exponent - t0.exponent, tj.lift - t0.lift);
        }
      }
      QMat a(static_cast<Index>(eqs.size()), 2);
      QVec b(static_cast<Index>(eqs.size()));
      for (std::size_t r = 0; r < eqs.size(); ++r) {
        a(static_cast<Index>(r), 0) = Rat(eqs[r].first(0));
        a(static_cast<Index>(r), 1) = Rat(eqs[r].first(1));
        b(static_cast<Index>(r)) = eqs[r].second;
      }
      auto x = solve_rational(a, b);
      ensure(x.has_value(), "intersection marker: singular dual system");
      markers.push_back({*x, w});
      anchors.push_back(*x);
    }
  }

  std::array<Rat, 4> box;
  if (opts.bbox) {
    box = *opts.bbox;
    require(box[0] < box[2] && box[1] < box[3], "emit_svg: empty bounding box");
  } else if (anchors.empty()) {
    box = {Rat(-5), Rat(-5), Rat(5), Rat(5)};
  } else {
    Rat x0 = anchors[0](0), x1 = x0, y0 = anchors[0](1), y1 = y0;
    for (const auto& p : anchors) {
      x0 = std::min(x0, p(0));
      x1 = std::max(x1, p(0));
      y0 = std::min(y0, p(1));
      y1 = std::max(y1, p(1));
    }
    box = {x0 - 2, y0 - 2, x1 + 2, y1 + 2};
  }

  const Rat scale(40);
  const Rat pad(20);
  // explicit Rat return: gmpxx expression templates must not outlive their
  // temporaries
  auto X = [&](const Rat& x) -> Rat { return pad + (x - box[0]) * scale; };
  auto Y = [&](const Rat& y) -> Rat { return pad + (box[3] - y) * scale; };
  Rat width = pad * 2 + (box[2] - box[0]) * scale;
  Rat height = pad * 2 + (box[3] - box[1]) * scale;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  svg << "  <rect x=\"" << fmt(X(box[0])) << "\" y=\"" << fmt(Y(box[3])) << "\" width=\""
      << fmt((box[2] - box[0]) * scale) << "\" height=\"" << fmt((box[3] - box[1]) * scale)
      << "\" fill=\"white\" stroke=\"#cccccc\"/>\n";

  auto line_elem = [&](const QVec& a, const QVec& b, int color) {
    svg << "  <line x1=\"" << fmt(X(a(0))) << "\" y1=\"" << fmt(Y(a(1))) << "\" x2=\""
        << fmt(X(b(0))) << "\" y2=\"" << fmt(Y(b(1))) << "\" stroke=\"" << palette(color)
        << "\" stroke-width=\"2\"/>\n";
  };

  for (const auto& s : bounded) line_elem(s.a, s.b, s.color);
  for (std::size_t r = 0; r < rays.size(); ++r) {
    const auto& [p, d] = rays[r];
    Rat t = clip_ray(p, d, box);
    if (t <= 0) continue;
    QVec q(2);
    q(0) = p(0) + t * Rat(d(0));
    q(1) = p(1) + t * Rat(d(1));
    line_elem(p, q, ray_colors[r]);
  }
  for (const auto& m : markers) {
    svg << "  <circle cx=\"" << fmt(X(m.at(0))) << "\" cy=\"" << fmt(Y(m.at(1)))
        << "\" r=\"4\" fill=\"black\"/>\n";
    if (m.weight > 1) {
      svg << "  <text x=\"" << fmt(X(m.at(0)) + Rat(6)) << "\" y=\"" << fmt(Y(m.at(1)) - Rat(6))
          << "\" font-size=\"12\">" << m.weight.get_str() << "</text>\n";
    }
  }

  if (opts.show_dual) {
    // dual subdivisions drawn in a side panel, one per polynomial
    Rat ox = width + pad;
    for (int i = 0; i < sys.size(); ++i) {
      const auto& f = sys.poly(i);
      auto data = dual_subdivision(f);
      for (const auto& face : data.dual.faces()) {
        if (face.dim != 1) continue;
        const auto& p0 = f.terms()[static_cast<std::size_t>(face.points[0])].exponent;
        const auto& p1 = f.terms()[static_cast<std::size_t>(face.points.back())].exponent;
        svg << "  <line x1=\"" << fmt(ox + Rat(p0(0)) * scale) << "\" y1=\""
            << fmt(height - pad - Rat(p0(1)) * scale) << "\" x2=\""
            << fmt(ox + Rat(p1(0)) * scale) << "\" y2=\""
            << fmt(height - pad - Rat(p1(1)) * scale) << "\" stroke=\"" << palette(i)
            << "\" stroke-width=\"1\"/>\n";
      }
      Int w = 0;
      for (const auto& v : f.newton_polytope().vertices()) w = std::max(w, Int(v(0)));
      ox += (Rat(w) + 1) * scale;
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

} // namespace trop
