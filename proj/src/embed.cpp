#include "cyclocover/embed.hpp"

#include <mpfr.h>

namespace cyclocover {

namespace {
unsigned bits_to_digits10(int bits) {
  // conservative: never ask boost for fewer digits than the bits carry
  return static_cast<unsigned>(bits * 0.30103) + 3;
}
} // namespace

ScopedPrecision::ScopedPrecision(int bits)
    : saved_digits10_(BigFloat::default_precision()) {
  if (bits < 2) throw std::invalid_argument("precision must be >= 2 bits");
  BigFloat::default_precision(bits_to_digits10(bits));
}

ScopedPrecision::~ScopedPrecision() {
  BigFloat::default_precision(saved_digits10_);
}

BigFloat to_bigfloat(const Rational& r) {
  BigFloat x;
  mpfr_set_q(x.backend().data(), r.get_mpq_t(), MPFR_RNDN);
  return x;
}

ComplexApprox embed_complex(const CycloNum& a, int precision_bits) {
  ScopedPrecision prec(precision_bits + 16); // guard bits for the summation
  BigFloat re = 0, im = 0;
  const int q = a.q();
  if (q == 1) {
    re = to_bigfloat(a.rational_part());
  } else {
    BigFloat pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    for (int k = 0; k < q; ++k) {
      const Rational& c = a.coeffs()[k];
      if (c == 0) continue;
      const BigFloat angle = 2 * pi * k / q;
      const BigFloat cf = to_bigfloat(c);
      re += cf * cos(angle);
      im += cf * sin(angle);
    }
  }
  return {std::move(re), std::move(im), precision_bits};
}

} // namespace cyclocover
