#include "trop/tropical.hpp"

#include <algorithm>

namespace trop {

TropicalPolynomial::TropicalPolynomial(Index ambient_dim, std::vector<TropicalTerm> terms)
    : n_(ambient_dim), terms_(std::move(terms)) {
  require(!terms_.empty(), "tropical polynomial needs at least one term");
  for (auto& t : terms_) {
    require(t.exponent.size() == n_, "term exponent dimension mismatch");
    require(t.sign == 0 || t.sign == 1 || t.sign == -1, "term sign must be +1 or -1");
    t.lift.canonicalize(); // GMP comparisons require canonical operands
  }
  std::vector<IVec> exps = exponents();
  std::sort(exps.begin(), exps.end(), lex_less);
  require(std::adjacent_find(exps.begin(), exps.end()) == exps.end(),
          "duplicate exponents in tropical polynomial");
}

std::vector<IVec> TropicalPolynomial::exponents() const {
  std::vector<IVec> out;
  for (const auto& t : terms_) out.push_back(t.exponent);
  return out;
}

std::vector<Rat> TropicalPolynomial::lift_values() const {
  std::vector<Rat> out;
  for (const auto& t : terms_) out.push_back(t.lift);
  return out;
}

bool TropicalPolynomial::all_signed() const {
  for (const auto& t : terms_)
    if (t.sign == 0) return false;
  return true;
}

const LatticePolytope& TropicalPolynomial::newton_polytope() const {
  if (!newton_) newton_ = LatticePolytope::hull(exponents());
  return *newton_;
}

TropicalPolynomial tropicalize(Index ambient_dim,
                               const std::vector<std::pair<IVec, PuiseuxLeadingTerm>>& monomials) {
  std::vector<TropicalTerm> terms;
  for (const auto& [exp, lead] : monomials) {
    require(lead.sign == 1 || lead.sign == -1, "leading coefficient sign must be +1 or -1");
    terms.push_back({exp, lead.valuation, lead.sign});
  }
  return TropicalPolynomial(ambient_dim, std::move(terms));
}

TropicalHypersurfaceData dual_subdivision(const TropicalPolynomial& f) {
  return {f, regular_subdivision(f.exponents(), f.lift_values())};
}

Truncation truncation(const TropicalPolynomial& f, const LatticePolytope::Face& gamma) {
  const LatticePolytope& delta = f.newton_polytope();
  // `gamma` must designate a face of the Newton polytope.
  bool is_face = false;
  for (const auto& g : delta.faces())
    if (g.verts == gamma.verts && g.facets == gamma.facets) is_face = true;
  require(is_face, "truncation: not a face of the Newton polytope");

  std::vector<int> kept;
  for (std::size_t i = 0; i < f.terms().size(); ++i)
    if (delta.face_contains_point(gamma, f.terms()[i].exponent)) kept.push_back(static_cast<int>(i));
  ensure(!kept.empty(), "truncation: face carries no terms");

  // Saturated basis of M(Gamma) from the kept exponents.
  IVec base = f.terms()[static_cast<std::size_t>(kept[0])].exponent;
  IMat dirs(static_cast<Index>(kept.size()) - 1, f.ambient_dim());
  for (std::size_t i = 1; i < kept.size(); ++i)
    dirs.row(static_cast<Index>(i - 1)) =
        (f.terms()[static_cast<std::size_t>(kept[i])].exponent - base).transpose();
  IMat basis = saturation(dirs);

  std::vector<TropicalTerm> terms;
  for (int i : kept) {
    const auto& t = f.terms()[static_cast<std::size_t>(i)];
    IVec diff = t.exponent - base;
    IVec c(basis.rows());
    if (basis.rows() > 0) {
      QMat bt(basis.cols(), basis.rows());
      for (Index r = 0; r < basis.rows(); ++r)
        for (Index j = 0; j < basis.cols(); ++j) bt(j, r) = Rat(basis(r, j));
      QVec rhs(diff.size());
      for (Index j = 0; j < diff.size(); ++j) rhs(j) = Rat(diff(j));
      auto sol = solve_rational(bt, rhs);
      ensure(sol.has_value(), "truncation: coordinate failure");
      for (Index r = 0; r < basis.rows(); ++r) {
        Rat v = (*sol)(r);
        v.canonicalize();
        ensure(v.get_den() == 1, "truncation: non-integral coordinate");
        c(r) = v.get_num();
      }
    }
    terms.push_back({c, t.lift, t.sign});
  }
  return {TropicalPolynomial(basis.rows(), std::move(terms)), kept, base, basis};
}

bool is_nonsingular(const TropicalPolynomial& f) {
  return is_primitive_triangulation(dual_subdivision(f).dual);
}

bool is_nondegenerate(const TropicalPolynomial& f) { return is_nonsingular(f); }

QVec vertex_coordinates(const TropicalHypersurfaceData& data, const SubFace& cell) {
  const Index n = data.poly.ambient_dim();
  require(cell.dim == static_cast<int>(n), "vertex_coordinates: cell must be full-dimensional");
  require(cell.points.size() >= static_cast<std::size_t>(n) + 1,
          "vertex_coordinates: too few points");
  // x . w - l(w) equal for all points of the cell: subtract the first.
  const auto& terms = data.poly.terms();
  const auto& p0 = terms[static_cast<std::size_t>(cell.points[0])];
  QMat a(static_cast<Index>(cell.points.size()) - 1, n);
  QVec b(static_cast<Index>(cell.points.size()) - 1);
  for (std::size_t i = 1; i < cell.points.size(); ++i) {
    const auto& pi = terms[static_cast<std::size_t>(cell.points[i])];
    for (Index j = 0; j < n; ++j) a(static_cast<Index>(i - 1), j) = Rat(pi.exponent(j) - p0.exponent(j));
    b(static_cast<Index>(i - 1)) = pi.lift - p0.lift;
  }
  auto x = solve_rational(a, b);
  ensure(x.has_value(), "vertex_coordinates: singular system on a full-dimensional cell");
  return *x;
}

} // namespace trop
