#include "trop/linalg.hpp"

#include <algorithm>

namespace trop {

Int determinant(const IMat& m) {
  require(m.rows() == m.cols(), "determinant: matrix must be square");
  const Index n = m.rows();
  if (n == 0) return 1;
  IMat a = m;
  Int denom = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        ensure(mpz_divisible_p(t.get_mpz_t(), denom.get_mpz_t()),
               "Bareiss elimination divisibility failed");
        a(i, j) = t / denom;
      }
      a(i, k) = 0;
    }
    denom = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Rat determinant(const QMat& m) {
  require(m.rows() == m.cols(), "determinant: matrix must be square");
  const Index n = m.rows();
  QMat a = m;
  Rat det = 1;
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.row(k).swap(a.row(p));
      det = -det;
    }
    det *= a(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

namespace {

// In-place integer row echelon via gcd elimination; returns pivot count.
// Row operations are unimodular, so the row lattice is preserved.
Index row_echelon(IMat& a) {
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      Index best = -1;
      for (Index i = r; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        if (best < 0 || cmp(abs(a(i, c)), abs(a(best, c))) < 0) best = i;
      }
      if (best < 0) break;
      if (best != r) a.row(r).swap(a.row(best));
      bool clean = true;
      for (Index i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Int q = a(i, c) / a(r, c); // truncated division keeps remainders small
        if (q != 0) a.row(i) -= a.row(r) * q;
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows && a(r, c) != 0) {
      if (a(r, c) < 0) a.row(r) = -a.row(r);
      ++r;
    }
  }
  return r;
}

} // namespace

IMat lattice_row_basis(const IMat& gens) {
  IMat a = gens;
  Index r = row_echelon(a);
  return a.topRows(r);
}

IMat integer_kernel(const IMat& a) {
  const Index m = a.rows(), n = a.cols();
  // Row-reduce [a^T | I_n]; rows whose a^T-part vanishes give kernel vectors.
  IMat aug(n, m + n);
  aug.setZero();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) aug(i, j) = a(j, i);
    aug(i, m + i) = 1;
  }
  // Echelonize only the left block.
  Index r = 0;
  for (Index c = 0; c < m && r < n; ++c) {
    for (;;) {
      Index best = -1;
      for (Index i = r; i < n; ++i) {
        if (aug(i, c) == 0) continue;
        if (best < 0 || cmp(abs(aug(i, c)), abs(aug(best, c))) < 0) best = i;
      }
      if (best < 0) break;
      if (best != r) aug.row(r).swap(aug.row(best));
      bool clean = true;
      for (Index i = r + 1; i < n; ++i) {
        if (aug(i, c) == 0) continue;
        Int q = aug(i, c) / aug(r, c);
        if (q != 0) aug.row(i) -= aug.row(r) * q;
        if (aug(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < n && aug(r, c) != 0) ++r;
  }
  IMat ker(n - r, n);
  for (Index i = r; i < n; ++i)
    for (Index j = 0; j < n; ++j) ker(i - r, j) = aug(i, m + j);
  return ker;
}

IMat saturation(const IMat& gens) {
  return integer_kernel(integer_kernel(gens));
}

IMat orthogonal_lattice(const IMat& gens, Index ambient_rank) {
  if (gens.rows() == 0) {
    IMat id(ambient_rank, ambient_rank);
    id.setZero();
    for (Index i = 0; i < ambient_rank; ++i) id(i, i) = 1;
    return id;
  }
  require(gens.cols() == ambient_rank, "orthogonal_lattice: dimension mismatch");
  return integer_kernel(gens);
}

IMat lattice_intersection(const IMat& a, const IMat& b) {
  require(a.cols() == b.cols(), "lattice_intersection: dimension mismatch");
  const Index n = a.cols();
  const Index ra = a.rows(), rb = b.rows();
  // x = u·a = v·b  <=>  (u, v) in ker [a^T | -b^T].
  IMat stacked(ra + rb, n);
  stacked.topRows(ra) = a;
  stacked.bottomRows(rb) = -b;
  IMat ker = integer_kernel(stacked.transpose()); // rows (u, v)
  IMat result(ker.rows(), n);
  for (Index i = 0; i < ker.rows(); ++i) {
    IVec x = IVec::Zero(n);
    for (Index j = 0; j < ra; ++j) x += ker(i, j) * a.row(j).transpose();
    result.row(i) = x.transpose();
  }
  return lattice_row_basis(result);
}

std::optional<QVec> solve_rational_any(const QMat& a, const QVec& b) {
  const Index m = a.rows(), n = a.cols();
  QMat aug(m, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  Index r = 0;
  std::vector<Index> pivot_col;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = r;
    while (p < m && aug(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r) aug.row(r).swap(aug.row(p));
    Rat inv = aug(r, c);
    for (Index j = c; j <= n; ++j) aug(r, j) /= inv;
    for (Index i = 0; i < m; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      Rat f = aug(i, c);
      for (Index j = c; j <= n; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (Index i = r; i < m; ++i)
    if (aug(i, n) != 0) return std::nullopt;
  QVec x = QVec::Zero(n);
  for (Index i = 0; i < r; ++i) x(pivot_col[i]) = aug(i, n);
  return x;
}

std::optional<QVec> solve_rational(const QMat& a, const QVec& b) {
  if (rank(a) != a.cols()) return std::nullopt;
  return solve_rational_any(a, b);
}

Index rank(const QMat& m) {
  QMat a = m;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(r).swap(a.row(p));
    for (Index i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Index rank(const IMat& m) {
  IMat a = m;
  return row_echelon(a);
}

std::optional<Int> lattice_index(const IMat& ambient_basis, const IMat& sub_generators) {
  const Index k = ambient_basis.rows();
  require(rank(ambient_basis) == k, "lattice_index: ambient rows are not a basis");
  require(sub_generators.cols() == ambient_basis.cols(),
          "lattice_index: dimension mismatch");
  // Coordinates of every generator with respect to the ambient basis.
  QMat bt(ambient_basis.cols(), k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < ambient_basis.cols(); ++j) bt(j, i) = Rat(ambient_basis(i, j));
  IMat coords(sub_generators.rows(), k);
  for (Index g = 0; g < sub_generators.rows(); ++g) {
    QVec rhs(ambient_basis.cols());
    for (Index j = 0; j < ambient_basis.cols(); ++j) rhs(j) = Rat(sub_generators(g, j));
    auto x = solve_rational(bt, rhs);
    require(x.has_value(), "lattice_index: generator outside the span of the ambient basis");
    for (Index j = 0; j < k; ++j) {
      Rat c = (*x)(j);
      c.canonicalize();
      require(c.get_den() == 1, "lattice_index: generator outside the ambient lattice");
      coords(g, j) = c.get_num();
    }
  }
  IMat basis = lattice_row_basis(coords);
  if (basis.rows() < k) return std::nullopt;
  Int d = determinant(basis);
  return abs(d);
}

std::pair<int, bool> F2AffineSystem::rank_and_consistent() const {
  std::vector<Row> rows = rows_;
  int rank = 0;
  std::size_t nrows = rows.size();
  for (int c = 0; c < n_ && static_cast<std::size_t>(rank) < nrows; ++c) {
    std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t p = rank;
    while (p < nrows && !(rows[p].coeffs & bit)) ++p;
    if (p == nrows) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i != static_cast<std::size_t>(rank) && (rows[i].coeffs & bit)) {
        rows[i].coeffs ^= rows[rank].coeffs;
        rows[i].rhs ^= rows[rank].rhs;
      }
    }
    ++rank;
  }
  bool consistent = true;
  for (std::size_t i = rank; i < nrows; ++i)
    if (rows[i].coeffs == 0 && rows[i].rhs) consistent = false;
  return {rank, consistent};
}

Int F2AffineSystem::solution_count() const {
  auto [r, ok] = rank_and_consistent();
  if (!ok) return 0;
  return pow_int(2, static_cast<unsigned long>(n_ - r));
}

Int f2_solution_count(const F2AffineSystem& sys) { return sys.solution_count(); }

} // namespace trop
