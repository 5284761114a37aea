#include "cyclocover/periods.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace cyclocover;
using testsupport::cn;
using testsupport::worked_a1;
using testsupport::worked_a2;
using testsupport::worked_b1;
using testsupport::worked_b2;

using testsupport::worked_tau_klein;
using testsupport::worked_tau_natural;
using testsupport::worked_tau_slide;

TEST_SUITE("periods") {

TEST_CASE("holomorphic form descriptors") {
  SUBCASE("y^7 = x(1-x): dx/y^4, dx/y^5, dx/y^6") {
    const auto forms = holomorphic_basis(make_curve_spec(7, 1, 1));
    REQUIRE(forms.size() == 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(forms[i].n == 4 + i);
      CHECK(forms[i].d == 0);
      CHECK(forms[i].alpha_l == 0);
      CHECK(forms[i].alpha_m == 0);
      CHECK(forms[i].eigen_exponent == 3 - i);
    }
  }
  SUBCASE("y^7 = x(1-x)^2: dx/y^3, (1-x)dx/y^5, (1-x)dx/y^6") {
    const auto forms = holomorphic_basis(make_curve_spec(7, 1, 2));
    REQUIRE(forms.size() == 3);
    CHECK(forms[0].n == 3);
    CHECK(forms[0].alpha_m == 0);
    CHECK(forms[1].n == 5);
    CHECK(forms[1].alpha_m == 1);
    CHECK(forms[2].n == 6);
    CHECK(forms[2].alpha_m == 1);
    for (const auto& f : forms) {
      CHECK(f.d == 0);
      CHECK(f.alpha_l == 0);
      CHECK(f.eigen_exponent == (7 - f.n) % 7);
    }
  }
  SUBCASE("count always equals the genus") {
    for (auto [p, l, m] :
         {std::tuple{11, 1, 3}, {13, 2, 3}, {9, 1, 1}, {15, 1, 1}, {13, 3, 4}})
      CHECK(holomorphic_basis(make_curve_spec(p, l, m)).size() ==
            static_cast<std::size_t>((p - 1) / 2));
  }
  SUBCASE("beta normalizer tags carry the exponents of the base integral") {
    const auto forms = holomorphic_basis(make_curve_spec(7, 1, 1));
    // dx/y^6: B(1/7, 1/7)
    CHECK(forms[2].beta_u == Rational(1) / 7);
    CHECK(forms[2].beta_v == Rational(1) / 7);
  }
}

TEST_CASE("normalized periods over the c_j loops") {
  const CurveSpec spec = make_curve_spec(7, 1, 1);
  const auto forms = holomorphic_basis(spec);
  const FormDescriptor& top = forms[2]; // n = 6, e = 1
  for (int j = 1; j <= 6; ++j)
    CHECK(normalized_period(top, j, spec) ==
          CycloNum(Rational(1)) - make_root(7, j));
  CHECK(normalized_period(top, 0, spec).is_zero());
  CHECK_THROWS_AS(normalized_period(top, 7, spec), std::invalid_argument);
  // e = 3 row: periods 1 - zeta^{3j}
  CHECK(normalized_period(forms[0], 2, spec) ==
        CycloNum(Rational(1)) - make_root(7, 6));
}

TEST_CASE("raw period matrix rows follow descending n") {
  const CycloMat raw = raw_period_matrix(make_curve_spec(7, 1, 2));
  REQUIRE(raw.rows() == 3);
  REQUIRE(raw.cols() == 6);
  // rows n = 6, 5, 3 -> eigen exponents 1, 2, 4
  const std::vector<int> e = {1, 2, 4};
  for (int r = 0; r < 3; ++r)
    for (int j = 1; j <= 6; ++j)
      CHECK(raw(r, j - 1) == CycloNum(Rational(1)) - make_root(7, e[r] * j));
}

TEST_CASE("period blocks reproduce the worked 3x3 matrices") {
  SUBCASE("y^7 = x(1-x) in the chord-slide basis") {
    const CurveSpec spec = make_curve_spec(7, 1, 1);
    const auto [a, b] =
        period_blocks(spec, basis_matrix(spec, Basis::chord_slide));
    CHECK(a == worked_a1());
    CHECK(b == worked_b1());
  }
  SUBCASE("y^7 = x(1-x)^2 in the curated slide basis") {
    const CurveSpec spec = make_curve_spec(7, 1, 2);
    const auto [a, b] = period_blocks(spec, basis_matrix(spec, Basis::klein));
    CHECK(a == worked_a2());
    CHECK(b == worked_b2());
  }
}

TEST_CASE("direct period matrices match the worked results") {
  const CurveSpec hyper = make_curve_spec(7, 1, 1);
  CHECK(period_matrix_direct(hyper, Basis::natural).tau == worked_tau_natural());
  CHECK(period_matrix_direct(hyper, Basis::chord_slide).tau == worked_tau_slide());
  CHECK(period_matrix_direct(make_curve_spec(7, 1, 2), Basis::klein).tau ==
        worked_tau_klein());
  // and the slide-basis matrix is exactly A_1^{-1} B_1
  CHECK(period_matrix_direct(hyper, Basis::chord_slide).tau ==
        mat_inverse(worked_a1()) * worked_b1());
}

TEST_CASE("direct period matrices are symmetric in other genera") {
  for (int q : {5, 9, 11}) {
    const CurveSpec spec = make_curve_spec(q, 1, 1);
    for (Basis b : {Basis::natural, Basis::chord_slide, Basis::schindler})
      CHECK(period_matrix_direct(spec, b).tau.is_symmetric());
  }
}

TEST_CASE("basis validity") {
  CHECK_THROWS_AS(basis_matrix(make_curve_spec(7, 1, 2), Basis::natural),
                  std::invalid_argument);
  CHECK_THROWS_AS(basis_matrix(make_curve_spec(7, 1, 2), Basis::schindler),
                  std::invalid_argument);
  CHECK_THROWS_AS(basis_matrix(make_curve_spec(7, 1, 1), Basis::klein),
                  std::invalid_argument);
  CHECK_THROWS_AS(basis_matrix(make_curve_spec(11, 1, 3), Basis::klein),
                  std::invalid_argument);
  // non-hyperelliptic chord_slide falls back to the generic reduction
  CHECK_NOTHROW(basis_matrix(make_curve_spec(11, 1, 3), Basis::chord_slide));
}

TEST_CASE("closed form against the direct computation") {
  for (int g : {2, 3, 4}) {
    const PeriodResult direct =
        period_matrix_direct(make_curve_spec(2 * g + 1, 1, 1), Basis::natural);
    CHECK(period_matrix_closed_form(g, HatVariant::summation_index).tau ==
          direct.tau);
    CHECK(period_matrix_closed_form(g, HatVariant::column_index).tau !=
          direct.tau);
  }
}

TEST_CASE("recurrence sequence and its period matrix") {
  SUBCASE("t_1 = (-1)^g zeta^{g^2}") {
    CHECK(schindler_sequence(2)[0] == make_root(5, 4));
    CHECK(schindler_sequence(3)[0] ==
          Rational(-1) * make_root(7, 2)); // 9 = 2 mod 7
    CHECK(schindler_sequence(4)[0] == make_root(9, 7));
  }
  SUBCASE("t_2 = t_1 (1 - 1/(1+zeta))") {
    for (int g : {2, 3, 5}) {
      const auto t = schindler_sequence(g);
      const CycloNum zeta = make_root(2 * g + 1, 1);
      CHECK(t[1] == t[0] * (CycloNum(Rational(1)) -
                            inverse(CycloNum(Rational(1)) + zeta)));
    }
  }
  SUBCASE("the recurrence matrix is the reversed direct matrix") {
    for (int g : {2, 3, 4}) {
      const PeriodResult direct = period_matrix_direct(
          make_curve_spec(2 * g + 1, 1, 1), Basis::schindler);
      const PeriodResult rec = schindler_tau(g);
      CHECK(rec.tau.is_symmetric());
      CHECK(rec.tau == direct.tau);
    }
  }
}

TEST_CASE("basis transforms of the period matrix") {
  const CurveSpec spec = make_curve_spec(7, 1, 1);
  const PeriodResult nat = period_matrix_direct(spec, Basis::natural);
  SUBCASE("-tau^{-1} + I lands in the chord-slide basis") {
    CHECK(transform_cs(nat).tau == worked_tau_slide());
  }
  SUBCASE("reversal lands in the schindler basis") {
    CHECK(transform_schindler(nat).tau ==
          period_matrix_direct(spec, Basis::schindler).tau);
  }
  SUBCASE("the symplectic action of H performs the slide-basis change") {
    CHECK(symplectic_action(basis_change_H(3), nat.tau) == worked_tau_slide());
  }
  SUBCASE("symplectic action basics") {
    CHECK(symplectic_action(IntMat::identity(6), nat.tau) == nat.tau);
    // J sends tau to -tau^{-1}
    const CycloMat image =
        symplectic_action(IntMat::std_symplectic_form(3), nat.tau);
    CHECK(image == -mat_inverse(nat.tau));
    CHECK_THROWS_AS(symplectic_action(IntMat::identity(4), nat.tau),
                    std::invalid_argument);
  }
}

TEST_CASE("tau is invariant under rescaling the form basis") {
  // multiplying the raw periods row-wise by nonzero scalars cancels in
  // Omega_A^{-1} Omega_B; this is why beta normalizers never need values
  const CurveSpec spec = make_curve_spec(9, 1, 1);
  const auto [a, b] = period_blocks(spec, basis_matrix(spec, Basis::natural));
  std::mt19937_64 rng(40923);
  std::uniform_int_distribution<long> pick(1, 12);
  CycloMat sa(4, 4, 9), sb(4, 4, 9);
  for (int i = 0; i < 4; ++i) {
    Rational s(pick(rng), pick(rng));
    s.canonicalize();
    for (int j = 0; j < 4; ++j) {
      sa.set(i, j, s * a(i, j));
      sb.set(i, j, s * b(i, j));
    }
  }
  CHECK(mat_inverse(sa) * sb == mat_inverse(a) * b);
}

} // TEST_SUITE
