#include "cyclocover/verify.hpp"

#include "cyclocover/embed.hpp"
#include "cyclocover/homology.hpp"
#include "cyclocover/periods.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclocover {

namespace {

std::string float_str(const BigFloat& x) {
  return x.str(8, std::ios_base::scientific);
}

// First (i,j) where the two matrices differ, as "(i,j)" 1-based; empty when
// equal.
std::string first_difference(const CycloMat& a, const CycloMat& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) {
        std::ostringstream os;
        os << "(" << i + 1 << "," << j + 1 << ")";
        return os.str();
      }
  return {};
}

} // namespace

RiemannReport check_riemann(const CycloMat& tau, int precision_bits) {
  const int g = tau.rows();
  if (tau.cols() != g) throw std::invalid_argument("tau must be square");
  if (precision_bits < 16)
    throw std::invalid_argument("need at least 16 bits of precision");
  RiemannReport rep;
  rep.precision = precision_bits;
  rep.symmetric = true;
  for (int i = 0; i < g && rep.symmetric; ++i)
    for (int j = i + 1; j < g; ++j)
      if (tau(i, j) != tau(j, i)) {
        rep.symmetric = false;
        rep.asym_row = i;
        rep.asym_col = j;
        break;
      }
  if (!rep.symmetric) return rep;

  ScopedPrecision guard(precision_bits);
  std::vector<std::vector<BigFloat>> m(g, std::vector<BigFloat>(g));
  BigFloat scale = 1;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      m[i][j] = embed_complex(tau(i, j), precision_bits).im;
      if (abs(m[i][j]) > scale) scale = abs(m[i][j]);
    }
  const BigFloat tol =
      scale * pow(BigFloat(2), -(precision_bits / 2));

  // LDL^T on the numerically symmetric real part; the smallest pivot is the
  // reported margin.
  std::vector<std::vector<BigFloat>> low(g, std::vector<BigFloat>(g));
  std::vector<BigFloat> d(g);
  BigFloat min_pivot = 0;
  rep.posdef = true;
  rep.conclusive = true;
  for (int j = 0; j < g; ++j) {
    BigFloat dj = m[j][j];
    for (int k = 0; k < j; ++k) dj -= low[j][k] * low[j][k] * d[k];
    if (j == 0 || dj < min_pivot) min_pivot = dj;
    if (abs(dj) <= tol) {
      rep.conclusive = false;
      rep.posdef = dj > 0;
      break;
    }
    if (dj < 0) {
      rep.posdef = false;
      break;
    }
    d[j] = dj;
    for (int i = j + 1; i < g; ++i) {
      BigFloat v = m[i][j];
      for (int k = 0; k < j; ++k) v -= low[i][k] * low[j][k] * d[k];
      low[i][j] = v / dj;
    }
  }
  rep.margin = float_str(min_pivot);
  return rep;
}

bool product_identity_holds(int q) {
  CycloNum prod{Rational(1)};
  for (int l = 1; l < q; ++l)
    prod = prod * (CycloNum(Rational(1)) - make_root(q, l));
  return prod == CycloNum(Rational(q));
}

CrossCheckReport cross_check(int g, int precision_bits) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  CrossCheckReport rep;
  rep.g = g;
  rep.q = 2 * g + 1;
  rep.precision = precision_bits;
  const CurveSpec spec = make_curve_spec(rep.q, 1, 1);
  auto add = [&rep](std::string name, bool pass, std::string detail = {},
                    std::string margin = {}) {
    rep.checks.push_back(
        {std::move(name), pass, std::move(detail), std::move(margin)});
  };

  const Cq1Reduction red = reduce_cq1(g);
  add("slide_reduction",
      red.T.congruence(red.A) == IntMat::std_symplectic_form(g) &&
          red.record.transform == red.T,
      "T A T^T standard; diagram record reproduces T");
  add("natural_basis_symplectic",
      natural_basis_K(g).congruence(red.A) == IntMat::std_symplectic_form(g));
  IntMat expected_h(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    expected_h.at(i, g + i) = 1;
    expected_h.at(g + i, i) = -1;
    expected_h.at(g + i, g + i) = -1;
  }
  const IntMat h = basis_change_H(g);
  add("basis_change_structure", h == expected_h && is_symplectic_Z(h),
      "H = (K^T)^{-1} T^T = [[0, I], [-I, -I]], symplectic");

  const PeriodResult nat = period_matrix_direct(spec, Basis::natural);
  const PeriodResult slide = period_matrix_direct(spec, Basis::chord_slide);
  const PeriodResult rev = period_matrix_direct(spec, Basis::schindler);

  const PeriodResult cf =
      period_matrix_closed_form(g, HatVariant::summation_index);
  add("closed_form_match", cf.tau == nat.tau,
      "hat over the summation index reproduces the direct matrix");
  const PeriodResult cf_bad =
      period_matrix_closed_form(g, HatVariant::column_index);
  const std::string diff = first_difference(cf_bad.tau, nat.tau);
  add("closed_form_variant", !diff.empty(),
      diff.empty() ? "column-index hat unexpectedly matches too"
                   : "column-index hat first differs at " + diff);

  add("inverse_transform", transform_cs(nat).tau == slide.tau,
      "-tau^{-1} + I equals the slide-basis matrix");
  add("reversal_transform", transform_schindler(nat).tau == rev.tau,
      "L tau L equals the reversed-basis matrix");
  add("recurrence_match", schindler_tau(g).tau == rev.tau,
      "recurrence matrix equals L tau L");
  add("product_identity", product_identity_holds(rep.q));

  for (const auto* pr : {&nat, &slide, &rev}) {
    const RiemannReport rr = check_riemann(pr->tau, precision_bits);
    std::string name =
        pr->basis == Basis::natural
            ? "riemann_natural"
            : pr->basis == Basis::chord_slide ? "riemann_slide"
                                              : "riemann_reversed";
    add(std::move(name), rr.pass(),
        rr.conclusive ? "Im(tau) positive definite"
                      : "margin below the precision threshold",
        rr.margin);
  }

  if (g == 3) {
    const KleinReduction kr = reduce_klein();
    add("klein_slide_variant", kr.six_factor_ok && !kr.five_move_ok,
        "six transvections reach the standard form; the five-move candidate "
        "does not");
  }

  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

} // namespace cyclocover
