#include "cyclocover/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace cyclocover {

namespace {

// Long division of integer polynomials (ascending coefficients, monic
// divisor); throws if the division is inexact.
std::vector<mpz_class> exact_div(std::vector<mpz_class> num,
                                 const std::vector<mpz_class>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  std::vector<mpz_class> quo(dn - dd + 1);
  for (int k = dn; k >= dd; --k) {
    if (num[k] == 0) continue;
    mpz_class c = num[k];
    quo[k - dd] = c;
    for (int t = 0; t <= dd; ++t) num[k - dd + t] -= c * den[t];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("inexact cyclotomic division");
  return quo;
}

std::map<int, std::vector<mpz_class>>& phi_cache() {
  static std::map<int, std::vector<mpz_class>> cache;
  return cache;
}

const std::vector<mpz_class>& phi_locked(int q) {
  auto& cache = phi_cache();
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  // x^q - 1 divided by Phi_d for every proper divisor d of q.
  std::vector<mpz_class> pol(q + 1);
  pol[0] = -1;
  pol[q] = 1;
  for (int d = 1; d < q; ++d)
    if (q % d == 0) pol = exact_div(std::move(pol), phi_locked(d));
  return cache.emplace(q, std::move(pol)).first->second;
}

// Reduces an arbitrary-length coefficient vector mod Phi_q in place and
// resizes it to the canonical length q.
void reduce_mod_phi(int q, std::vector<Rational>& c) {
  const auto& phi = cyclotomic_polynomial(q);
  const int deg = static_cast<int>(phi.size()) - 1;
  if (static_cast<int>(c.size()) < q) c.resize(q);
  for (int k = static_cast<int>(c.size()) - 1; k >= deg; --k) {
    if (c[k] == 0) continue;
    Rational f = c[k];
    for (int t = 0; t <= deg; ++t) c[k - deg + t] -= f * phi[t];
  }
  c.resize(q);
}

void check_order(int q) {
  if (q == 1) return;
  if (q < 5 || q % 2 == 0)
    throw std::invalid_argument("cyclotomic order must be odd and >= 5 (got " +
                                std::to_string(q) + ")");
}

int common_order(const CycloNum& a, const CycloNum& b) {
  if (a.q() == b.q()) return a.q();
  if (a.q() == 1) return b.q();
  if (b.q() == 1) return a.q();
  throw std::invalid_argument("mismatched cyclotomic orders q=" +
                              std::to_string(a.q()) + " and q=" +
                              std::to_string(b.q()));
}

std::vector<Rational> promoted_coeffs(const CycloNum& a, int q) {
  std::vector<Rational> c = a.coeffs();
  c.resize(q); // q == 1 values are constants, already canonical in any field
  return c;
}

// --- dense rational polynomials (ascending, trimmed) for the field gcd ---

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_divmod(Poly num, const Poly& den, Poly& quo) {
  const int dd = static_cast<int>(den.size()) - 1;
  const int dn = static_cast<int>(num.size()) - 1;
  quo.assign(dn >= dd ? dn - dd + 1 : 0, Rational(0));
  for (int k = dn; k >= dd; --k) {
    if (num[k] == 0) continue;
    Rational f = num[k] / den[dd];
    quo[k - dd] = f;
    for (int t = 0; t <= dd; ++t) num[k - dd + t] -= f * den[t];
  }
  trim(num);
  return num;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int q) {
  if (q < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  std::scoped_lock lock(mu);
  return phi_locked(q);
}

CycloNum CycloNum::from_coeffs(int q, std::vector<Rational> coeffs) {
  check_order(q);
  reduce_mod_phi(q, coeffs);
  return CycloNum(q, std::move(coeffs));
}

bool CycloNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rational CycloNum::rational_part() const {
  if (!is_rational())
    throw std::logic_error("rational_part of a non-rational cyclotomic number");
  return c_[0];
}

CycloNum CycloNum::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return CycloNum(q_, std::move(c));
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  const int q = common_order(*this, o);
  std::vector<Rational> c = promoted_coeffs(*this, q);
  const std::vector<Rational> b = promoted_coeffs(o, q);
  for (int k = 0; k < q; ++k) c[k] += b[k];
  return CycloNum(q, std::move(c));
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
  const int q = common_order(*this, o);
  std::vector<Rational> c = promoted_coeffs(*this, q);
  const std::vector<Rational> b = promoted_coeffs(o, q);
  for (int k = 0; k < q; ++k) c[k] -= b[k];
  return CycloNum(q, std::move(c));
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  const int q = common_order(*this, o);
  const std::vector<Rational> a = promoted_coeffs(*this, q);
  const std::vector<Rational> b = promoted_coeffs(o, q);
  std::vector<Rational> prod(2 * q, Rational(0));
  for (int i = 0; i < q; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < q; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  reduce_mod_phi(q, prod);
  return CycloNum(q, std::move(prod));
}

CycloNum CycloNum::operator/(const CycloNum& o) const {
  return *this * inverse(o);
}

bool CycloNum::operator==(const CycloNum& o) const {
  if (q_ == o.q_) return c_ == o.c_;
  const int q = common_order(*this, o); // throws on a true mismatch
  return promoted_coeffs(*this, q) == promoted_coeffs(o, q);
}

CycloNum operator*(const Rational& r, const CycloNum& a) {
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x *= r;
  return CycloNum(a.q(), std::move(c));
}

CycloNum make_root(int q, long k) {
  if (q < 5 || q % 2 == 0)
    throw std::invalid_argument("root order must be odd and >= 5 (got " +
                                std::to_string(q) + ")");
  const long e = ((k % q) + q) % q;
  std::vector<Rational> c(q, Rational(0));
  c[e] = 1;
  return CycloNum::from_coeffs(q, std::move(c));
}

CycloNum inverse(const CycloNum& a) {
  if (a.is_zero())
    throw std::domain_error("division by zero in cyclotomic field");
  const int q = a.q();
  if (q == 1) return CycloNum(Rational(1) / a.rational_part());

  const auto& phi_int = cyclotomic_polynomial(q);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = a.coeffs();
  trim(r1);
  // Invariant: s_i * a == r_i (mod Phi_q).  Phi_q is irreducible over Q, so
  // the gcd of a nonzero canonical representative with it is a constant.
  Poly s0, s1 = {Rational(1)};
  while (!r1.empty()) {
    Poly quo;
    Poly r2 = poly_divmod(std::move(r0), r1, quo);
    r0 = std::move(r1);
    r1 = std::move(r2);
    Poly s2 = poly_sub(std::move(s0), poly_mul(quo, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw std::logic_error("cyclotomic inverse: non-constant gcd");
  for (auto& c : s0) c /= r0[0];
  return CycloNum::from_coeffs(q, std::move(s0));
}

CycloNum pow(const CycloNum& a, long e) {
  if (e < 0) return pow(inverse(a), -e);
  CycloNum acc = a.q() == 1 ? CycloNum(1L)
                            : CycloNum::from_coeffs(a.q(), {Rational(1)});
  CycloNum base = a;
  for (unsigned long n = static_cast<unsigned long>(e); n; n >>= 1) {
    if (n & 1) acc = acc * base;
    if (n > 1) base = base * base;
  }
  return acc;
}

} // namespace cyclocover
