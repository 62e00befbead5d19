#include "trop/invariants.hpp"

#include <algorithm>

namespace trop {

Int stirling2(int i, int j) {
  require(i >= 0 && j >= 0, "stirling2: nonnegative indices required");
  // recurrence S2(i,j) = j S2(i-1,j) + S2(i-1,j-1)
  std::vector<std::vector<Int>> s(static_cast<std::size_t>(i) + 1,
                                  std::vector<Int>(static_cast<std::size_t>(j) + 1, Int(0)));
  s[0][0] = 1;
  for (int a = 1; a <= i; ++a)
    for (int b = 1; b <= std::min(a, j); ++b)
      s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          Int(b) * s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] +
          s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
  return s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

CoefficientTable coefficient_table(int N) {
  require(N >= 1, "coefficient_table: N >= 1 required");
  CoefficientTable tab;
  tab.N = N;
  tab.S.resize(static_cast<std::size_t>(N) + 1);
  tab.C.resize(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    tab.S[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Int(0));
    tab.C[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Int(0));
    for (int l = 0; l <= n; ++l) {
      Int s = 0;
      for (int i = 0; i <= n; ++i)
        for (int p = 0; p <= i; ++p) {
          Int term = binomial(static_cast<unsigned long>(n + 1),
                              static_cast<unsigned long>(i - p)) *
                     ipow(p, static_cast<unsigned long>(l));
          s += (p % 2 == 0) ? term : -term;
        }
      if (n % 2 != 0) s = -s;
      tab.S[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)] = s;

      Int c = 0;
      for (int k = 1; k <= n; ++k) {
        Int inner = 0;
        for (int t = 0; t <= k + 1; ++t) {
          Int term = binomial(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(t)) *
                     ipow(t, static_cast<unsigned long>(l + 1));
          inner += (t % 2 == 0) ? term : -term;
        }
        ensure(mpz_divisible_ui_p(inner.get_mpz_t(), static_cast<unsigned long>(k + 1)),
               "coefficient_table: inner sum must be divisible by k+1");
        c += (pow_int(2, static_cast<unsigned long>(n)) -
              pow_int(2, static_cast<unsigned long>(n - k))) *
             (inner / Int(k + 1));
      }
      if ((n - l) % 2 != 0) c = -c;
      tab.C[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)] = c;
    }
  }
  return tab;
}

namespace {

Int neg2_pow(int n) {
  Int p = pow_int(2, static_cast<unsigned long>(n));
  return (n % 2 == 0) ? p : Int(-p);
}

} // namespace

Int sigma_hypersurface(const EhrhartPolynomial& a, int n) {
  require(a.degree() == n, "sigma_hypersurface: Ehrhart degree must equal n");
  require(n >= 1, "sigma_hypersurface: dimension must be positive");
  CoefficientTable tab = coefficient_table(n);
  Rat acc = Rat(-neg2_pow(n));
  for (int l = 0; l <= n; ++l)
    acc += Rat(tab.S[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)]) *
           a.a[static_cast<std::size_t>(l)];
  return rat_to_int(acc, "sigma_hypersurface");
}

Int euler_formula_hypersurface(const EhrhartPolynomial& a, int n) {
  require(a.degree() == n, "euler_formula_hypersurface: Ehrhart degree must equal n");
  require(n >= 1, "euler_formula_hypersurface: dimension must be positive");
  // direct triple sum
  Rat acc = 0;
  for (int k = 1; k <= n; ++k) {
    Rat factor = make_rat(pow_int(2, static_cast<unsigned long>(n)) -
                              pow_int(2, static_cast<unsigned long>(n - k)),
                          Int(k + 1));
    Rat inner = 0;
    for (int l = k; l <= n; ++l)
      for (int t = 0; t <= k + 1; ++t) {
        Rat term = Rat(binomial(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(t)) *
                       ipow(t, static_cast<unsigned long>(l + 1))) *
                   a.a[static_cast<std::size_t>(l)];
        inner += ((t + l) % 2 == 0) ? term : -term;
      }
    acc += factor * inner;
  }
  if (n % 2 != 0) acc = -acc;
  Int chi = rat_to_int(acc, "euler_formula_hypersurface");

  // equivalent form through the C-table
  CoefficientTable tab = coefficient_table(n);
  Rat acc2 = 0;
  for (int l = 1; l <= n; ++l)
    acc2 += Rat(tab.C[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)]) *
            a.a[static_cast<std::size_t>(l)];
  ensure(Rat(chi) == acc2, "euler_formula_hypersurface: the two forms disagree");
  return chi;
}

std::vector<Int> nb_k_formula(const EhrhartPolynomial& a, int n) {
  require(a.degree() == n, "nb_k_formula: Ehrhart degree must equal n");
  std::vector<Int> nb;
  for (int k = 0; k <= n; ++k) {
    Rat acc = 0;
    for (int l = k; l <= n; ++l) {
      Rat term = Rat(factorial(static_cast<unsigned long>(k)) * stirling2(l + 1, k + 1)) *
                 a.a[static_cast<std::size_t>(l)];
      acc += ((n - l) % 2 == 0) ? term : -term;
    }
    Int v = rat_to_int(acc, "nb_k_formula");
    ensure(v >= 0, "nb_k_formula: negative simplex count");
    nb.push_back(v);
  }
  return nb;
}

Rat PhiPolynomial::eval(const Rat& u) const {
  Rat acc = 0;
  Rat p = 1;
  for (const auto& c : coeffs) {
    acc += c * p;
    p *= u;
  }
  return acc;
}

PhiPolynomial phi_polynomial(const EhrhartPolynomial& a, int n) {
  require(a.degree() == n, "phi_polynomial: Ehrhart degree must equal n");
  std::vector<Int> psi = psi_coefficients(a);
  // numerator (u-1)^n + (-1)^{n+1} S(C,u), degree n
  std::vector<Rat> num(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int i = 0; i <= n; ++i) {
    Int b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i));
    if ((n - i) % 2 != 0) b = -b;
    num[static_cast<std::size_t>(i)] += Rat(b);
    Int p = psi[static_cast<std::size_t>(i)];
    num[static_cast<std::size_t>(i)] += Rat((n % 2 == 0) ? -p : p);
  }
  ensure(num[0] == 0, "phi_polynomial: numerator not divisible by u");
  PhiPolynomial phi;
  phi.coeffs.assign(num.begin() + 1, num.end());
  Int sigma = sigma_hypersurface(a, n);
  ensure(phi.eval(Rat(-1)) == Rat(sigma),
         "phi_polynomial: phi(-1) must equal the mixed signature");
  return phi;
}

namespace {

// sigma~ of the hypersurface { g = 0 } in the torus of Z^m whose Newton
// polytope is Q (dimension possibly below m): a torus factor splits off and
// contributes (-2) per missing dimension.
Int sigma_of_polytope_hypersurface(const LatticePolytope& q, Index m) {
  if (q.dim() == 0) return 0; // monomial: empty hypersurface
  LatticePolytope r = (q.dim() == static_cast<int>(m)) ? q : q.restricted();
  Int s = sigma_hypersurface(ehrhart(r), r.dim());
  int codim = static_cast<int>(m) - q.dim();
  return s * neg2_pow(codim);
}

// sigma~(X_I) for every nonempty I, where X_I = { sum_{i in I} y_i f_i - 1 = 0 }
// has Newton polytope conv({0} u Cayley points of (Delta_i)_{i in I}).
std::vector<std::pair<std::vector<int>, Int>> sigma_x_terms(
    const std::vector<LatticePolytope>& deltas, Index n) {
  const int k = static_cast<int>(deltas.size());
  std::vector<std::pair<std::vector<int>, Int>> out;
  for (std::uint64_t I = 1; I < (std::uint64_t{1} << k); ++I) {
    std::vector<int> members;
    for (int i = 0; i < k; ++i)
      if ((I >> i) & 1) members.push_back(i);
    const Index m = n + static_cast<Index>(members.size());
    std::vector<IVec> pts;
    pts.push_back(IVec::Zero(m)); // the exponent of the constant term
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      for (const auto& v : deltas[static_cast<std::size_t>(members[pos])].vertices()) {
        IVec p = IVec::Zero(m);
        for (Index c = 0; c < n; ++c) p(c) = v(c);
        p(n + static_cast<Index>(pos)) = 1;
        pts.push_back(std::move(p));
      }
    }
    LatticePolytope q = LatticePolytope::hull(pts);
    out.emplace_back(members, sigma_of_polytope_hypersurface(q, m));
  }
  return out;
}

} // namespace

Int sigma_complete_intersection(const std::vector<LatticePolytope>& deltas, Index n) {
  require(!deltas.empty(), "sigma_complete_intersection: no polytopes");
  const int k = static_cast<int>(deltas.size());
  for (const auto& d : deltas)
    require(d.ambient_dim() == n, "sigma_complete_intersection: ambient dimension mismatch");
  {
    LatticePolytope sum = minkowski_sum(deltas);
    require(sum.dim() == static_cast<int>(n),
            "sigma_complete_intersection: sum of polytopes must be full-dimensional");
  }
  Int acc = 0;
  for (const auto& [members, s] : sigma_x_terms(deltas, n)) acc += s;
  Int result = neg2_pow(static_cast<int>(n));
  result += (k % 2 == 0) ? acc : Int(-acc);
  return result;
}

Int sigma_compactified(const std::vector<LatticePolytope>& deltas) {
  require(!deltas.empty(), "sigma_compactified: no polytopes");
  const Index n = deltas[0].ambient_dim();
  const int k = static_cast<int>(deltas.size());
  LatticePolytope delta = minkowski_sum(deltas);
  Int total = 0;
  for (const auto& face : delta.faces()) {
    IVec u = delta.ambient_face_functional(face);
    // unique Minkowski decomposition of the face
    std::vector<LatticePolytope> gammas;
    bool positive = true;
    for (int i = 0; i < k; ++i) {
      std::vector<IVec> arg;
      for (int vi : deltas[static_cast<std::size_t>(i)].argmin_vertices(u))
        arg.push_back(deltas[static_cast<std::size_t>(i)].vertices()[static_cast<std::size_t>(vi)]);
      LatticePolytope g = LatticePolytope::hull(arg);
      if (g.dim() == 0) {
        positive = false;
        break;
      }
      gammas.push_back(std::move(g));
    }
    if (!positive) continue;
    // restrict the collection to a common frame of M(Gamma)
    std::vector<IVec> dirs;
    for (const auto& g : gammas)
      for (const auto& v : g.vertices()) dirs.push_back(v - g.vertices()[0]);
    IMat m(static_cast<Index>(dirs.size()), n);
    for (Index r = 0; r < m.rows(); ++r) m.row(r) = dirs[static_cast<std::size_t>(r)].transpose();
    IMat basis = saturation(m);
    const Index d = basis.rows();
    ensure(static_cast<int>(d) == face.dim, "sigma_compactified: face dimension mismatch");
    QMat bt(n, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < n; ++j) bt(j, i) = Rat(basis(i, j));
    std::vector<LatticePolytope> restricted;
    for (const auto& g : gammas) {
      std::vector<IVec> cpts;
      for (const auto& v : g.vertices()) {
        IVec diff = v - g.vertices()[0];
        QVec rhs(n);
        for (Index j = 0; j < n; ++j) rhs(j) = Rat(diff(j));
        auto sol = solve_rational(bt, rhs);
        ensure(sol.has_value(), "sigma_compactified: coordinate failure");
        IVec c(d);
        for (Index r = 0; r < d; ++r) {
          Rat v2 = (*sol)(r);
          v2.canonicalize();
          ensure(v2.get_den() == 1, "sigma_compactified: non-integral coordinate");
          c(r) = v2.get_num();
        }
        cpts.push_back(std::move(c));
      }
      restricted.push_back(LatticePolytope::hull(cpts));
    }
    total += sigma_complete_intersection(restricted, d);
  }
  return total;
}

MainTheoremReport verify_main_theorem(const TropicalSystem& sys, bool with_compact) {
  require(is_nondegenerate_system(sys), "verify_main_theorem: system must be nondegenerate");
  MainTheoremReport rep;
  PatchworkComplex complex = ci_complex(sys);
  rep.chi = euler_torus(complex);
  rep.cell_counts = complex.cell_counts;

  std::vector<LatticePolytope> deltas = sys.newton_polytopes();
  const Index n = sys.ambient_dim();
  const int k = sys.size();
  rep.sigma_x_terms = sigma_x_terms(deltas, n);
  Int acc = 0;
  for (const auto& [members, s] : rep.sigma_x_terms) acc += s;
  rep.sigma = neg2_pow(static_cast<int>(n));
  rep.sigma += (k % 2 == 0) ? acc : Int(-acc);
  rep.equal = (rep.chi == rep.sigma);

  if (with_compact) {
    rep.with_compact = true;
    rep.chi_compact = euler_compactified(sys);
    rep.sigma_compact = sigma_compactified(deltas);
    rep.equal_compact = (rep.chi_compact == rep.sigma_compact);
  }
  return rep;
}

IdentityReport identity_suite(int N) {
  require(N >= 1 && N <= 10, "identity_suite: N must be in 1..10");
  IdentityReport rep;

  // vanlint: sum_q (-1)^q C(i,q) q^l = sum_q (-1)^q C(i,q) (i-q)^l = 0 for l+1 <= i,
  // and sum_q (-1)^q C(i,q) (p-q)^l = 0 for any p.
  for (int i = 0; i <= N; ++i)
    for (int l = 0; l + 1 <= i; ++l) {
      Int s1 = 0, s2 = 0;
      for (int q = 0; q <= i; ++q) {
        Int b = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(q));
        Int t1 = b * ipow(q, static_cast<unsigned long>(l));
        Int t2 = b * ipow(i - q, static_cast<unsigned long>(l));
        if (q % 2 != 0) {
          t1 = -t1;
          t2 = -t2;
        }
        s1 += t1;
        s2 += t2;
      }
      if (s1 != 0 || s2 != 0) {
        rep.vanlint = false;
        rep.notes.push_back("vanlint fails at i=" + std::to_string(i) + " l=" + std::to_string(l));
      }
      for (int p = -N; p <= N; ++p) {
        Int s3 = 0;
        for (int q = 0; q <= i; ++q) {
          Int b = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(q));
          Int base = Int(p - q);
          Int t = b * pow_int(base, static_cast<unsigned long>(l));
          if (q % 2 != 0) t = -t;
          s3 += t;
        }
        if (s3 != 0) {
          rep.vanlint = false;
          rep.notes.push_back("vanlint (shifted) fails at i=" + std::to_string(i) +
                              " l=" + std::to_string(l) + " p=" + std::to_string(p));
        }
      }
    }

  // binrmq: sum_{t=0}^p 2^{p-t} C(t,k) = sum_{l=k+1}^{p+1} C(p+1,l)
  for (int p = 0; p <= N; ++p)
    for (int k = 0; k <= p; ++k) {
      Int lhs = 0;
      for (int t = 0; t <= p; ++t)
        lhs += pow_int(2, static_cast<unsigned long>(p - t)) *
               binomial(static_cast<unsigned long>(t), static_cast<unsigned long>(k));
      Int rhs = 0;
      for (int l = k + 1; l <= p + 1; ++l)
        rhs += binomial(static_cast<unsigned long>(p + 1), static_cast<unsigned long>(l));
      if (lhs != rhs) {
        rep.binrmq = false;
        rep.notes.push_back("binrmq fails at p=" + std::to_string(p) + " k=" + std::to_string(k));
      }
    }

  // recurrences and the diagonal equality on the coefficient tables
  CoefficientTable tab = coefficient_table(N);
  for (int n = 0; n <= N; ++n) {
    if (tab.S[static_cast<std::size_t>(n)][0] != neg2_pow(n)) {
      rep.recurrences = false;
      rep.notes.push_back("S_{0,n} != (-2)^n at n=" + std::to_string(n));
    }
  }
  for (int n = 1; n < N; ++n)
    for (int l = 0; l <= n; ++l) {
      if (l >= 1 &&
          tab.S[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(l)] !=
              Int(-2) * tab.S[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)]) {
        rep.recurrences = false;
        rep.notes.push_back("S recurrence fails at n=" + std::to_string(n) + " l=" + std::to_string(l));
      }
      if (tab.C[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(l)] !=
          Int(-2) * tab.C[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)]) {
        rep.recurrences = false;
        rep.notes.push_back("C recurrence fails at n=" + std::to_string(n) + " l=" + std::to_string(l));
      }
    }
  for (int n = 1; n <= N; ++n)
    if (tab.S[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] !=
        tab.C[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)]) {
      rep.diagonal = false;
      rep.notes.push_back("S_{n,n} != C_{n,n} at n=" + std::to_string(n));
    }
  return rep;
}

} // namespace trop
