#pragma once

// Exact rational scalar used wherever conformal weights and mode-operator
// coefficients must be compared with no floating-point slack.  The scalar is
// GMP's mpq_class (always stored reduced, positive denominator); this header
// adds construction helpers and the NumTraits glue that lets the type live
// inside Eigen matrices.

#include <Eigen/Core>
#include <gmpxx.h>

#include <string>

#include "fusionkit/errors.hpp"

namespace fusionkit {

using Rational = mpq_class;

// num/den in lowest terms with positive denominator.
inline Rational rational(long num, long den = 1) {
  if (den == 0) throw domain_error("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "n/d" for non-integers, plain "n" otherwise (GMP's canonical formatting).
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace fusionkit

namespace Eigen {

// Exact scalar: epsilon and dummy_precision are genuinely zero.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen
