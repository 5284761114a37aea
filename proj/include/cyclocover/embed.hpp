#pragma once

#include "cyclocover/cyclotomic.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace cyclocover {

using BigFloat = boost::multiprecision::mpfr_float;

// Sets the thread-default MPFR precision (in bits) for the lifetime of the
// object and restores the previous value on destruction.
class ScopedPrecision {
public:
  explicit ScopedPrecision(int bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
  unsigned saved_digits10_;
};

struct ComplexApprox {
  BigFloat re, im;
  int precision; // working precision in bits
};

BigFloat to_bigfloat(const Rational& r);

// Evaluates the coefficient polynomial at exp(2*pi*i/q).  Error is bounded by
// the coefficient 1-norm times unit roundoff at the working precision (a few
// ulps per term; not a certified enclosure).
ComplexApprox embed_complex(const CycloNum& a, int precision_bits = 128);

} // namespace cyclocover
