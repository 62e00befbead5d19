#pragma once

// Exact integer/rational linear algebra on lattices: determinants, echelon
// bases, kernels, saturations, orthogonal complements, lattice indices and
// affine systems over F2.

#include "trop/numeric.hpp"

namespace trop {

// Exact determinant of a square integer matrix (fraction-free Bareiss).
Int determinant(const IMat& m);

// Exact determinant of a square rational matrix (Gaussian elimination).
Rat determinant(const QMat& m);

// Row-style integer echelon basis: the returned rows generate the same
// lattice as the rows of `gens` and are linearly independent (Hermite-style
// elimination, rank many rows).
IMat lattice_row_basis(const IMat& gens);

// Basis (rows) of { x in Z^cols : a * x = 0 }.  Kernels of integer matrices
// are saturated lattices.
IMat integer_kernel(const IMat& a);

// Basis (rows) of the saturation span_Q(rows of gens) ∩ Z^n.
IMat saturation(const IMat& gens);

// Basis (rows) of { m in Z^n : m · g = 0 for every row g of gens }.
// The result is saturated.  `ambient_rank` disambiguates when gens is empty.
IMat orthogonal_lattice(const IMat& gens, Index ambient_rank);

// Basis (rows) of the intersection of the two row lattices.
IMat lattice_intersection(const IMat& a, const IMat& b);

// Index [Λ : γ] where Λ has basis `ambient_basis` (rows) and γ is generated
// by `sub_generators` (rows).  nullopt encodes an infinite index (rank
// deficit).  Generators outside Λ are rejected.
std::optional<Int> lattice_index(const IMat& ambient_basis, const IMat& sub_generators);

// Unique rational solution of a * x = b, or nullopt when the system is
// inconsistent or underdetermined.
std::optional<QVec> solve_rational(const QMat& a, const QVec& b);

// General solver: returns one particular rational solution of a * x = b when
// the system is consistent (free variables set to zero).
std::optional<QVec> solve_rational_any(const QMat& a, const QVec& b);

// Rank of a rational (or integer) matrix.
Index rank(const QMat& m);
Index rank(const IMat& m);

inline QMat to_rational(const IMat& m) {
  QMat r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// Affine system over F2: rows of (coeffs, rhs) with n unknowns.  n <= 64.
class F2AffineSystem {
public:
  explicit F2AffineSystem(int n) : n_(n) {
    require(n >= 0 && n <= 64, "F2 system supports at most 64 unknowns");
  }

  int unknowns() const { return n_; }

  void add_equation(std::uint64_t coeffs, int rhs) {
    rows_.push_back({coeffs & mask(), static_cast<std::uint64_t>(rhs & 1)});
  }

  // 0 if inconsistent, else 2^(n - rank).
  Int solution_count() const;

  // rank of the coefficient part after elimination, and consistency.
  std::pair<int, bool> rank_and_consistent() const;

private:
  std::uint64_t mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  }
  struct Row {
    std::uint64_t coeffs;
    std::uint64_t rhs;
  };
  int n_;
  std::vector<Row> rows_;
};

Int f2_solution_count(const F2AffineSystem& sys);

} // namespace trop
