#include "cyclocover/periods.hpp"

#include <stdexcept>
#include <utility>

namespace cyclocover {

namespace {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

CycloNum one_minus(const CycloNum& z) { return CycloNum(Rational(1)) - z; }

IntMat block_diag(const IntMat& a, const IntMat& b) {
  IntMat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

void require_hyperelliptic(const CurveSpec& spec, const char* what) {
  if (!spec.hyperelliptic())
    throw std::invalid_argument(std::string(what) +
                                " is defined for y^q = x(1-x) only");
}

} // namespace

std::vector<FormDescriptor> holomorphic_basis(const CurveSpec& spec) {
  std::vector<FormDescriptor> out;
  const int p = spec.p;
  for (int n = 1; n < p; ++n) {
    const int al = n * spec.l / p;
    const int am = n * spec.m / p;
    const int dn = n * (spec.l + spec.m) / p - al - am - 1;
    for (int d = 0; d <= dn; ++d) {
      FormDescriptor f;
      f.n = n;
      f.d = d;
      f.alpha_l = al;
      f.alpha_m = am;
      f.d_n = dn;
      f.eigen_exponent = (p - n) % p;
      f.beta_u = Rational(al + d + 1) - make_rational(n * spec.l, p);
      f.beta_v = Rational(am + 1) - make_rational(n * spec.m, p);
      out.push_back(std::move(f));
    }
  }
  if (static_cast<int>(out.size()) != spec.genus())
    throw std::logic_error("holomorphic form count does not match the genus");
  return out;
}

CycloNum normalized_period(const FormDescriptor& form, int j,
                           const CurveSpec& spec) {
  if (j < 0 || j >= spec.p)
    throw std::invalid_argument("loop index out of range");
  return one_minus(make_root(spec.p, form.eigen_exponent * j));
}

CycloMat raw_period_matrix(const CurveSpec& spec) {
  const std::vector<FormDescriptor> forms = holomorphic_basis(spec);
  const int g = spec.genus();
  CycloMat raw(g, 2 * g, spec.p);
  for (int r = 0; r < g; ++r) {
    const FormDescriptor& f = forms[g - 1 - r]; // descending n
    for (int j = 1; j < spec.p; ++j)
      raw.set(r, j - 1, normalized_period(f, j, spec));
  }
  return raw;
}

std::pair<CycloMat, CycloMat> period_blocks(const CurveSpec& spec,
                                            const IntMat& basis) {
  const int g = spec.genus();
  if (basis.rows() != 2 * g || basis.cols() != 2 * g)
    throw std::invalid_argument("basis matrix must be 2g x 2g");
  const CycloMat omega =
      raw_period_matrix(spec) * CycloMat::from_int(basis.transpose(), spec.p);
  CycloMat a(g, g, spec.p), b(g, g, spec.p);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      a.set(i, j, omega(i, j));
      b.set(i, j, omega(i, g + j));
    }
  return {std::move(a), std::move(b)};
}

IntMat basis_matrix(const CurveSpec& spec, Basis basis) {
  const int g = spec.genus();
  switch (basis) {
    case Basis::natural:
      require_hyperelliptic(spec, "the natural a/b basis");
      return natural_basis_K(g);
    case Basis::chord_slide:
      if (spec.hyperelliptic()) return reduce_cq1(g).T;
      return reduce_generic(intersection_matrix(spec));
    case Basis::schindler: {
      require_hyperelliptic(spec, "the reversed basis");
      const IntMat l = reversal_L(g);
      return block_diag(l, l) * natural_basis_K(g);
    }
    case Basis::klein: {
      if (spec != CurveSpec{7, 1, 2})
        throw std::invalid_argument(
            "the curated slide basis exists for y^7 = x(1-x)^2 only");
      return reduce_klein().T;
    }
  }
  throw std::invalid_argument("unknown basis");
}

PeriodResult period_matrix_direct(const CurveSpec& spec, Basis basis) {
  auto [oa, ob] = period_blocks(spec, basis_matrix(spec, basis));
  CycloMat tau = mat_inverse(oa) * ob;
  if (!tau.is_symmetric())
    throw std::logic_error("period matrix came out asymmetric");
  return {spec, basis, Construction::direct, std::move(tau)};
}

PeriodResult period_matrix_closed_form(int g, HatVariant variant) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  const int q = 2 * g + 1;
  const CurveSpec spec = make_curve_spec(q, 1, 1);
  std::vector<CycloNum> even_powers(g); // zeta^2, zeta^4, ..., zeta^{2g}
  for (int t = 1; t <= g; ++t) even_powers[t - 1] = make_root(q, 2 * t);
  // tail_product[k] = prod_{m=g-k+1}^{2g-k} (1 - zeta^{2m}), k = 1..g
  std::vector<CycloNum> tail_product(g + 1, CycloNum(Rational(1)));
  for (int k = 1; k <= g; ++k) {
    CycloNum prod{Rational(1)};
    for (int m = g - k + 1; m <= 2 * g - k; ++m)
      prod = prod * one_minus(make_root(q, 2 * m));
    tail_product[k] = std::move(prod);
  }
  auto deleted = [&](int skip) { // even powers with zeta^{2 skip} removed
    std::vector<CycloNum> xs;
    xs.reserve(g - 1);
    for (int t = 1; t <= g; ++t)
      if (t != skip) xs.push_back(even_powers[t - 1]);
    return xs;
  };
  CycloMat tau(g, g, q);
  for (int i = 1; i <= g; ++i) {
    const Rational sign_over_q =
        make_rational((i + g) % 2 == 0 ? 1 : -1, q);
    for (int j = 1; j <= g; ++j) {
      CycloNum sum{Rational(0)};
      for (int k = 1; k <= g; ++k) {
        const int skip = variant == HatVariant::summation_index ? k : j;
        sum = sum + one_minus(make_root(q, 2 * k * j)) *
                        sym_poly(g - i, deleted(skip)) * tail_product[k];
      }
      tau.set(i - 1, j - 1, sign_over_q * sum);
    }
  }
  return {spec, Basis::natural, Construction::closed_form, std::move(tau)};
}

std::vector<CycloNum> schindler_sequence(int g) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  const int q = 2 * g + 1;
  const CycloNum zeta = make_root(q, 1);
  const CycloNum one{Rational(1)};
  std::vector<CycloNum> t(g + 1); // 1-based
  const Rational sign = g % 2 ? Rational(-1) : Rational(1);
  t[1] = sign * make_root(q, g * g);
  t[2] = t[1] * (one - inverse(one + zeta));
  for (int i = 2; i < g; ++i) {
    CycloNum sum{Rational(0)};
    for (int k = 2; k <= i; ++k)
      sum = sum + make_root(q, g - i + k - 1) * t[k] * t[i - k + 2];
    t[i + 1] = t[1] * (one - sum) * inverse(one + make_root(q, -i));
  }
  t.erase(t.begin());
  return t;
}

PeriodResult schindler_tau(int g) {
  const int q = 2 * g + 1;
  const std::vector<CycloNum> t = schindler_sequence(g); // 0-based here
  const CycloNum t1_inv = inverse(t[0]);
  const CycloNum one{Rational(1)};
  CycloMat tau(g, g, q);
  for (int i = 1; i <= g; ++i)
    for (int j = i; j <= g; ++j) {
      CycloNum sum{Rational(0)};
      for (int k = 1; k <= i; ++k) sum = sum + t[k - 1] * t[j - i + k - 1];
      const CycloNum s = one - t1_inv * sum;
      tau.set(i - 1, j - 1, s);
      tau.set(j - 1, i - 1, s);
    }
  return {make_curve_spec(q, 1, 1), Basis::schindler, Construction::recurrence,
          std::move(tau)};
}

PeriodResult transform_cs(const PeriodResult& r) {
  const int g = r.tau.rows();
  PeriodResult out{r.curve, Basis::chord_slide, Construction::transform,
                   CycloMat::identity(g, r.tau.q()) - mat_inverse(r.tau)};
  return out;
}

PeriodResult transform_schindler(const PeriodResult& r) {
  const int g = r.tau.rows();
  const CycloMat l = CycloMat::from_int(reversal_L(g), r.tau.q());
  return {r.curve, Basis::schindler, Construction::transform, l * r.tau * l};
}

CycloMat symplectic_action(const IntMat& M, const CycloMat& tau) {
  const int g = tau.rows();
  if (tau.cols() != g || M.rows() != 2 * g || M.cols() != 2 * g)
    throw std::invalid_argument("need a 2g x 2g matrix acting on a g x g tau");
  CycloMat p(g, g, tau.q()), qq(g, g, tau.q()), r(g, g, tau.q()),
      s(g, g, tau.q());
  auto entry = [](long long v) {
    return CycloNum(Rational(static_cast<long>(v)));
  };
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      p.set(i, j, entry(M(i, j)));
      qq.set(i, j, entry(M(i, g + j)));
      r.set(i, j, entry(M(g + i, j)));
      s.set(i, j, entry(M(g + i, g + j)));
    }
  return mat_inverse(p + tau * r) * (qq + tau * s);
}

} // namespace cyclocover
