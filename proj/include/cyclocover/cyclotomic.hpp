#pragma once

#include "cyclocover/rational.hpp"

#include <vector>

namespace cyclocover {

// Coefficients of the q-th cyclotomic polynomial Phi_q, ascending degree,
// monic, integer. Cached per q; q >= 1.
const std::vector<mpz_class>& cyclotomic_polynomial(int q);

/*
 * Element of the cyclotomic field Q(zeta_q) = Q[x]/Phi_q(x), stored on the
 * power basis 1, zeta, ..., zeta^{q-1} as a length-q rational vector whose
 * entries at degree >= deg Phi_q are zero after normalization.  For prime q
 * this is exactly the representative obtained by eliminating the top
 * coefficient with 1 + zeta + ... + zeta^{q-1} = 0; for composite q reducing
 * mod Phi_q keeps the ring a field, so every nonzero element is invertible.
 *
 * q == 1 holds plain rationals.  Mixed-q arithmetic promotes a rational
 * operand into the other field and otherwise throws.
 *
 * Values are immutable; arithmetic returns fresh objects.  Equality is
 * componentwise comparison of canonical vectors.
 */
class CycloNum {
public:
  CycloNum() : q_(1), c_(1, Rational(0)) {}
  explicit CycloNum(const Rational& r) : q_(1), c_(1, r) {}
  explicit CycloNum(long n) : q_(1), c_(1, Rational(n)) {}

  // Builds from an arbitrary coefficient vector (any length <= q allowed,
  // padded with zeros) and normalizes mod Phi_q.
  static CycloNum from_coeffs(int q, std::vector<Rational> coeffs);

  int q() const { return q_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const; // all coefficients of positive powers vanish
  Rational rational_part() const; // throws std::logic_error unless rational

  CycloNum operator-() const;
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator/(const CycloNum& o) const;
  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  friend CycloNum operator*(const Rational& r, const CycloNum& a);

private:
  int q_;
  std::vector<Rational> c_; // length q_, canonical

  CycloNum(int q, std::vector<Rational> canonical_coeffs)
      : q_(q), c_(std::move(canonical_coeffs)) {}
};

// zeta_q^k, exponent reduced mod q.  Requires odd q >= 5.
CycloNum make_root(int q, long k);

// Multiplicative inverse.  Throws std::domain_error on zero.
CycloNum inverse(const CycloNum& a);

// Integer power (negative exponents via inverse).
CycloNum pow(const CycloNum& a, long e);

} // namespace cyclocover
