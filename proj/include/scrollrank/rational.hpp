#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

// mpq_class as an Eigen scalar. All arithmetic is exact, so epsilon and
// dummy_precision are zero.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 120,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace scrollrank {

using Int = mpz_class;
using Rat = mpq_class;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMat = Mat<Rat>;
using RatVec = Vec<Rat>;
using Index = Eigen::Index;

inline std::string to_string(const Rat& x) { return x.get_str(); }

/// The two-argument mpq_class constructor does not canonicalize; every
/// numerator/denominator construction must go through here.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat x(num, den);
  x.canonicalize();
  return x;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

/// Parses a decimal-free rational: "p/q" or just "p".
inline Rat rat_from_string(const std::string& s) {
  Rat x;
  if (s.empty() || x.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (x.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  }
  x.canonicalize();
  return x;
}

inline double to_double(const Rat& x) { return x.get_d(); }

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

/// Narrowing conversion with an overflow check; dimension bookkeeping only.
inline long to_long(const Int& x) {
  if (!x.fits_slong_p()) {
    throw std::overflow_error("integer too large for a machine word: " +
                              x.get_str());
  }
  return x.get_si();
}

inline Int ceil_of(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Int floor_of(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

}  // namespace scrollrank
