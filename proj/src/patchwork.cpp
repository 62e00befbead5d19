#include "trop/patchwork.hpp"

#include <algorithm>

namespace trop {

int sign_in_copy(int sign, const IVec& w, std::uint64_t eps) {
  require(sign == 1 || sign == -1, "sign_in_copy: sign must be +1 or -1");
  int parity = 0;
  for (Index i = 0; i < w.size(); ++i)
    if ((eps >> i) & 1) parity ^= static_cast<int>(mpz_odd_p(w(i).get_mpz_t()));
  return parity ? -sign : sign;
}

namespace {

bool mixed_in_copy(const SignedSimplex& s, std::uint64_t eps) {
  bool pos = false, neg = false;
  for (std::size_t v = 0; v < s.verts.size(); ++v) {
    if (sign_in_copy(s.signs[v], s.verts[v], eps) > 0)
      pos = true;
    else
      neg = true;
  }
  return pos && neg;
}

void validate_simplices(const std::vector<SignedSimplex>& simplices, int n) {
  require(n >= 0 && n <= 64, "count_mixed_copies: dimension out of range");
  for (const auto& s : simplices) {
    require(s.verts.size() >= 2, "count_mixed_copies: simplex needs at least 2 vertices");
    require(s.verts.size() == s.signs.size(), "count_mixed_copies: sign per vertex required");
    for (const auto& v : s.verts)
      require(v.size() == n, "count_mixed_copies: vertex dimension mismatch");
  }
}

} // namespace

Int count_mixed_copies_bruteforce(const std::vector<SignedSimplex>& simplices, int n) {
  validate_simplices(simplices, n);
  require(n <= 16, "brute-force copy count limited to n <= 16");
  Int count = 0;
  for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << n); ++eps) {
    bool all = true;
    for (const auto& s : simplices)
      if (!mixed_in_copy(s, eps)) {
        all = false;
        break;
      }
    if (all) ++count;
  }
  return count;
}

Int count_mixed_copies_f2(const std::vector<SignedSimplex>& simplices, int n) {
  validate_simplices(simplices, n);
  // Inclusion-exclusion over the subsets J forced all-equal: a simplex is
  // all-equal in copy eps iff, for every edge from its first vertex,
  // eps . (w - w0) = [delta(w) != delta(w0)] over F2.
  const std::size_t m = simplices.size();
  Int total = 0;
  for (std::uint64_t J = 0; J < (std::uint64_t{1} << m); ++J) {
    F2AffineSystem sys(n);
    for (std::size_t s = 0; s < m; ++s) {
      if (!((J >> s) & 1)) continue;
      const auto& sim = simplices[s];
      for (std::size_t v = 1; v < sim.verts.size(); ++v) {
        std::uint64_t coeffs = 0;
        for (Index i = 0; i < static_cast<Index>(n); ++i) {
          Int diff = sim.verts[v](i) - sim.verts[0](i);
          if (mpz_odd_p(diff.get_mpz_t())) coeffs |= std::uint64_t{1} << i;
        }
        int rhs = (sim.signs[v] != sim.signs[0]) ? 1 : 0;
        sys.add_equation(coeffs, rhs);
      }
    }
    Int ways = f2_solution_count(sys);
    int bits = 0;
    for (std::size_t s = 0; s < m; ++s)
      if ((J >> s) & 1) ++bits;
    total += (bits % 2 == 0) ? ways : Int(-ways);
  }
  ensure(total >= 0, "F2 copy count must be nonnegative");
  return total;
}

Int count_mixed_copies(const std::vector<SignedSimplex>& simplices, int n) {
  Int f2 = count_mixed_copies_f2(simplices, n);
  if (n <= 16) {
    Int brute = count_mixed_copies_bruteforce(simplices, n);
    ensure(brute == f2, "copy counting paths disagree");
  }
  return f2;
}

Int PatchworkComplex::euler() const {
  Int chi = 0;
  for (std::size_t j = 0; j < cell_counts.size(); ++j) {
    if (j % 2 == 0)
      chi += cell_counts[j];
    else
      chi -= cell_counts[j];
  }
  return chi;
}

PatchworkComplex hypersurface_complex(const TropicalPolynomial& f) {
  require(f.all_signed(), "hypersurface_complex: real data (signs) required");
  TropicalHypersurfaceData data = dual_subdivision(f);
  require(data.dual.dim() == static_cast<int>(f.ambient_dim()),
          "hypersurface_complex: Newton polytope must be full-dimensional "
          "(restrict to its lattice first)");
  require(is_primitive_triangulation(data.dual),
          "hypersurface_complex: dual subdivision must be a primitive triangulation");
  const int n = static_cast<int>(f.ambient_dim());
  PatchworkComplex out;
  out.n = n;
  out.k = 1;
  out.cell_counts.assign(static_cast<std::size_t>(std::max(n, 1)), Int(0));
  for (const auto& face : data.dual.faces()) {
    if (face.dim < 1 || !face.interior) continue;
    SignedSimplex s;
    for (int p : face.points) {
      s.verts.push_back(f.terms()[static_cast<std::size_t>(p)].exponent);
      s.signs.push_back(f.terms()[static_cast<std::size_t>(p)].sign);
    }
    Int copies = count_mixed_copies({s}, n);
    out.cell_counts[static_cast<std::size_t>(face.dim - 1)] += copies;
    out.contributions.push_back({{face.points}, face.dim - 1, copies});
  }
  return out;
}

PatchworkComplex ci_complex(const TropicalSystem& sys) {
  for (const auto& p : sys.polys())
    require(p.all_signed(), "ci_complex: real data (signs) required");
  MixedSubdivision ms = cayley_trick(sys);
  require(ms.delta().dim() == static_cast<int>(sys.ambient_dim()),
          "ci_complex: the Minkowski sum of the Newton polytopes must be "
          "full-dimensional (restrict to its lattice first)");
  require(is_primitive_triangulation(ms.cayley_subdivision()),
          "ci_complex: system must be nondegenerate");
  const int n = static_cast<int>(sys.ambient_dim());
  const int k = sys.size();
  PatchworkComplex out;
  out.n = n;
  out.k = k;
  out.cell_counts.assign(static_cast<std::size_t>(std::max(n - k + 1, 1)), Int(0));
  for (const auto& cell : ms.cells()) {
    if (!cell.interior) continue;
    bool positive = true;
    for (int d : cell.factor_dims)
      if (d < 1) positive = false;
    if (!positive) continue;
    std::vector<SignedSimplex> sims;
    for (int i = 0; i < k; ++i) {
      SignedSimplex s;
      for (int t : cell.factor_terms[static_cast<std::size_t>(i)]) {
        s.verts.push_back(sys.poly(i).terms()[static_cast<std::size_t>(t)].exponent);
        s.signs.push_back(sys.poly(i).terms()[static_cast<std::size_t>(t)].sign);
      }
      sims.push_back(std::move(s));
    }
    Int copies = count_mixed_copies(sims, n);
    int cell_dim = cell.dim - k;
    ensure(cell_dim >= 0, "ci_complex: negative cell dimension");
    out.cell_counts[static_cast<std::size_t>(cell_dim)] += copies;
    out.contributions.push_back({cell.factor_terms, cell_dim, copies});
  }
  return out;
}

Int euler_torus(const PatchworkComplex& complex) { return complex.euler(); }

Int euler_compactified(const TropicalSystem& sys) {
  DeltaFaces df = minkowski_face_decompositions(sys);
  Int chi = 0;
  for (const auto& dec : df.decompositions) {
    bool positive = true;
    for (int d : dec.face_dims)
      if (d < 1) positive = false;
    if (!positive) continue; // some truncation is a monomial: empty piece
    std::vector<int> factors;
    for (int i = 0; i < sys.size(); ++i) factors.push_back(i);
    FaceSystem fs = face_system(sys, {factors, dec.face_terms, dec.face_dims});
    chi += euler_torus(ci_complex(fs.system));
  }
  return chi;
}

std::vector<Int> nb_k_direct(const RegularSubdivision& tri) {
  require(is_primitive_triangulation(tri), "nb_k_direct: primitive triangulation required");
  std::vector<Int> nb(static_cast<std::size_t>(tri.dim()) + 1, Int(0));
  for (const auto& face : tri.faces())
    if (face.interior) ++nb[static_cast<std::size_t>(face.dim)];
  return nb;
}

} // namespace trop
