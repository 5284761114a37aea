#pragma once

#include "cyclocover/cyclotomic.hpp"
#include "cyclocover/intmat.hpp"
#include "cyclocover/matrix.hpp"

#include <random>
#include <utility>
#include <vector>

namespace testsupport {

using cyclocover::CycloMat;
using cyclocover::CycloNum;
using cyclocover::IntMat;
using cyclocover::Rational;

// Shorthand: element of Q(zeta_q) from small integer coefficients (ascending
// powers; shorter lists are zero-padded).
inline CycloNum cn(int q, std::vector<long> coeffs) {
  std::vector<Rational> cs(coeffs.begin(), coeffs.end());
  cs.resize(q, Rational(0));
  return CycloNum::from_coeffs(q, cs);
}

/// Independent multiplication oracle: plain cyclic convolution mod x^q - 1,
// canonicalized afterwards.  Exercises none of the library's product or
// reduction code paths beyond from_coeffs.
inline CycloNum cyclic_mul(const CycloNum& a, const CycloNum& b) {
  const int q = a.q();
  std::vector<Rational> conv(q, Rational(0));
  for (int i = 0; i < q; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (int j = 0; j < q; ++j)
      conv[(i + j) % q] += a.coeffs()[i] * b.coeffs()[j];
  }
  return CycloNum::from_coeffs(q, conv);
}

inline CycloNum random_cyclo(int q, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> cs(q);
  for (int k = 0; k < q; ++k) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    cs[k] = r;
  }
  return CycloNum::from_coeffs(q, cs);
}

inline IntMat int_mat(std::vector<std::vector<long long>> rows) {
  IntMat m(static_cast<int>(rows.size()),
           static_cast<int>(rows.empty() ? 0 : rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

// sum of sign * zeta_7^e terms, transcription helper for the worked 3x3
// period blocks
using Terms = std::vector<std::pair<int, int>>;

inline CycloNum zsum7(const Terms& terms) {
  CycloNum out{Rational(0)};
  for (const auto& [sign, e] : terms)
    out = out + Rational(sign) * cyclocover::make_root(7, e);
  return out;
}

inline CycloMat from_terms(const std::vector<std::vector<Terms>>& rows) {
  CycloMat m(static_cast<int>(rows.size()),
             static_cast<int>(rows[0].size()), 7);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, zsum7(rows[i][j]));
  return m;
}

/// Worked genus-3 period blocks: (A_1, B_1) for y^7 = x(1-x) in the slide
// basis, (A_2, B_2) for y^7 = x(1-x)^2 in its curated basis, exactly as
// displayed (exponents above 6 are reduced by zeta^7 = 1).
inline CycloMat worked_a1() {
  return from_terms(
      {{Terms{{1, 0}, {-1, 1}},
        Terms{{1, 0}, {-1, 1}, {1, 2}, {-1, 3}},
        Terms{{1, 0}, {-1, 1}, {1, 2}, {-1, 3}, {1, 4}, {-1, 5}}},
       {Terms{{1, 0}, {-1, 2}},
        Terms{{1, 0}, {-1, 2}, {1, 4}, {-1, 6}},
        Terms{{1, 0}, {-1, 2}, {1, 4}, {-1, 6}, {1, 8}, {-1, 10}}},
       {Terms{{1, 0}, {-1, 3}},
        Terms{{1, 0}, {-1, 3}, {1, 6}, {-1, 9}},
        Terms{{1, 0}, {-1, 3}, {1, 6}, {-1, 9}, {1, 12}, {-1, 15}}}});
}

inline CycloMat worked_b1() {
  return from_terms(
      {{Terms{{1, 0}, {-1, 2}},
        Terms{{1, 0}, {-1, 1}, {1, 2}, {-1, 4}},
        Terms{{1, 0}, {-1, 1}, {1, 2}, {-1, 3}, {1, 4}, {-1, 6}}},
       {Terms{{1, 0}, {-1, 4}},
        Terms{{1, 0}, {-1, 2}, {1, 4}, {-1, 8}},
        Terms{{1, 0}, {-1, 2}, {1, 4}, {-1, 6}, {1, 8}, {-1, 12}}},
       {Terms{{1, 0}, {-1, 6}},
        Terms{{1, 0}, {-1, 3}, {1, 6}, {-1, 12}},
        Terms{{1, 0}, {-1, 3}, {1, 6}, {-1, 9}, {1, 12}, {-1, 18}}}});
}

inline CycloMat worked_a2() {
  return from_terms({{Terms{{1, 0}, {-1, 1}}, Terms{{1, 1}, {-1, 2}},
                      Terms{{1, 0}, {-1, 2}, {1, 3}, {-1, 5}}},
                     {Terms{{1, 0}, {-1, 2}}, Terms{{1, 2}, {-1, 4}},
                      Terms{{1, 0}, {-1, 4}, {1, 6}, {-1, 10}}},
                     {Terms{{1, 0}, {-1, 4}}, Terms{{1, 4}, {-1, 8}},
                      Terms{{1, 0}, {-1, 8}, {1, 12}, {-1, 20}}}});
}

inline CycloMat worked_b2() {
  return from_terms({{Terms{{1, 0}, {-1, 3}}, Terms{{1, 0}, {-1, 4}},
                      Terms{{1, 1}, {-1, 2}, {1, 4}, {-1, 6}}},
                     {Terms{{1, 0}, {-1, 6}}, Terms{{1, 0}, {-1, 8}},
                      Terms{{1, 2}, {-1, 4}, {1, 8}, {-1, 12}}},
                     {Terms{{1, 0}, {-1, 12}}, Terms{{1, 0}, {-1, 16}},
                      Terms{{1, 4}, {-1, 8}, {1, 16}, {-1, 24}}}});
}

// Worked genus-3 period matrices over Q(zeta_7), one per basis.

inline CycloMat worked_tau_natural() {
  CycloMat t(3, 3, 7);
  auto put = [&](int i, int j, std::vector<long> c) {
    t.set(i, j, cn(7, c));
    t.set(j, i, cn(7, std::move(c)));
  };
  put(0, 0, {0, 0, 0, 0, 0, -1});
  put(0, 1, {-1, 0, -1, 0, -1, -1});
  put(0, 2, {1, 1, 0, 1, 0, 1});
  put(1, 1, {1, 1, 0, 2, -1, 1});
  put(1, 2, {2, 0, 1, 1, 0, 1});
  put(2, 2, {1, 0, 1});
  return t;
}

inline CycloMat worked_tau_slide() {
  CycloMat t(3, 3, 7);
  auto put = [&](int i, int j, std::vector<long> c) {
    t.set(i, j, cn(7, c));
    t.set(j, i, cn(7, std::move(c)));
  };
  put(0, 0, {4, 1, 2, 2, 1, 2});
  put(0, 1, {-1, -2, 0, -2, 0, -2});
  put(0, 2, {-1, 1, -1});
  put(1, 1, {-1, 1, -1, 0, -1, -1});
  put(1, 2, {1, 0, 0, 1, 0, 1});
  put(2, 2, {1, 0, 1});
  return t;
}

// (1/4)(a + b xi) entries with xi = zeta + zeta^2 + zeta^4.
inline CycloMat worked_tau_klein() {
  const CycloNum xi = cn(7, {0, 1, 1, 0, 1});
  CycloMat t(3, 3, 7);
  auto quarter = [](long v) {
    Rational r(v, 4);
    r.canonicalize();
    return r;
  };
  auto put = [&](int i, int j, long a, long b) {
    const CycloNum v = CycloNum(quarter(a)) + quarter(b) * xi;
    t.set(i, j, v);
    t.set(j, i, v);
  };
  put(0, 0, 6, 3);
  put(0, 1, 4, 2);
  put(0, 2, -2, -1);
  put(1, 1, 4, 4);
  put(1, 2, 0, -2);
  put(2, 2, 2, 3);
  return t;
}

} // namespace testsupport
