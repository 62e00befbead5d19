#pragma once

// Exact scalar types and dense containers used across the library.
// All core arithmetic is arbitrary precision (GMP); no floating point
// enters any geometric predicate or formula.

#include <Eigen/Core>
#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

using Int = mpz_class;
using Rat = mpq_class;

} // namespace trop

namespace Eigen {

template <> struct NumTraits<trop::Int> : GenericNumTraits<trop::Int> {
  typedef trop::Int Real;
  typedef trop::Int NonInteger;
  typedef trop::Int Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <> struct NumTraits<trop::Rat> : GenericNumTraits<trop::Rat> {
  typedef trop::Rat Real;
  typedef trop::Rat NonInteger;
  typedef trop::Rat Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

} // namespace Eigen

namespace trop {

using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

// Contract violations by the caller (bad input, precondition failures).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Broken internal invariants (a bug, or arithmetic that must be integral
// coming out fractional).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ValidationError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

inline bool lex_less(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

struct LexLess {
  bool operator()(const IVec& a, const IVec& b) const { return lex_less(a, b); }
};

inline IVec ivec_of(std::initializer_list<long> xs) {
  IVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// p^e with the combinatorial convention 0^0 = 1.
inline Int ipow(long base, unsigned long e) { return pow_int(Int(base), e); }

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// The two-argument mpq_class constructors do NOT canonicalize, and GMP
// comparisons require canonical operands.  Every rational built from a
// numerator/denominator pair must go through make_rat (or canonicalize()).
inline Rat make_rat(const Int& num, const Int& den) {
  require(den != 0, "make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat canonical(Rat q) {
  q.canonicalize();
  return q;
}

// Exact conversion; throws InternalError when the rational is not integral.
inline Int rat_to_int(const Rat& q, const char* where) {
  Rat c = q;
  c.canonicalize();
  ensure(c.get_den() == 1, std::string(where) + ": non-integer value " + c.get_str());
  return c.get_num();
}

// Serialization used by the CLI and file formats: integers verbatim,
// non-integers as "p/q" with positive q.
inline std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal: " + s);
  require(q.get_den() != 0, "zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

} // namespace trop
