#include "cyclocover/verify.hpp"

#include "cyclocover/periods.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

using namespace cyclocover;
using testsupport::cn;

TEST_SUITE("verify") {

TEST_CASE("riemann conditions on computed period matrices") {
  const PeriodResult nat =
      period_matrix_direct(make_curve_spec(7, 1, 1), Basis::natural);
  const RiemannReport rep = check_riemann(nat.tau, 128);
  CHECK(rep.symmetric);
  CHECK(rep.posdef);
  CHECK(rep.conclusive);
  CHECK(rep.pass());
  CHECK(rep.precision == 128);
  // margin is the smallest LDL^T pivot; must parse as a positive number
  CHECK(std::stod(rep.margin) > 0.1);

  const PeriodResult klein =
      period_matrix_direct(make_curve_spec(7, 1, 2), Basis::klein);
  CHECK(check_riemann(klein.tau, 256).pass());
}

TEST_CASE("riemann check flags asymmetry exactly") {
  CycloMat t(2, 2, 7);
  t.set(0, 0, cn(7, {1}));
  t.set(0, 1, cn(7, {0, 1}));
  t.set(1, 0, cn(7, {0, 0, 1})); // differs from (0,1)
  t.set(1, 1, cn(7, {1}));
  const RiemannReport rep = check_riemann(t);
  CHECK_FALSE(rep.symmetric);
  CHECK(rep.asym_row == 0);
  CHECK(rep.asym_col == 1);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("riemann check rejects a negated period matrix") {
  const PeriodResult nat =
      period_matrix_direct(make_curve_spec(5, 1, 1), Basis::natural);
  const RiemannReport rep = check_riemann(-nat.tau, 128);
  CHECK(rep.symmetric);
  CHECK_FALSE(rep.posdef);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("riemann check argument validation") {
  const PeriodResult nat =
      period_matrix_direct(make_curve_spec(5, 1, 1), Basis::natural);
  CHECK_THROWS_AS(check_riemann(nat.tau, 8), std::invalid_argument);
  CycloMat rect(2, 3, 5);
  CHECK_THROWS_AS(check_riemann(rect), std::invalid_argument);
}

TEST_CASE("cyclotomic product identity") {
  for (int q = 5; q <= 15; q += 2) CHECK(product_identity_holds(q));
}

TEST_CASE("cross check ledger") {
  SUBCASE("g = 2") {
    const CrossCheckReport rep = cross_check(2);
    CHECK(rep.g == 2);
    CHECK(rep.q == 5);
    CHECK(rep.all_pass);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.name);
    // the Klein comparison only applies at genus 3
    CHECK(std::none_of(rep.checks.begin(), rep.checks.end(), [](auto& c) {
      return c.name == "klein_slide_variant";
    }));
  }
  SUBCASE("g = 3 includes the Klein comparison") {
    const CrossCheckReport rep = cross_check(3);
    CHECK(rep.all_pass);
    const auto it =
        std::find_if(rep.checks.begin(), rep.checks.end(),
                     [](auto& c) { return c.name == "klein_slide_variant"; });
    REQUIRE(it != rep.checks.end());
    CHECK(it->pass);
    // the deliberately wrong closed-form variant must be flagged with a
    // witness entry
    const auto var =
        std::find_if(rep.checks.begin(), rep.checks.end(),
                     [](auto& c) { return c.name == "closed_form_variant"; });
    REQUIRE(var != rep.checks.end());
    CHECK(var->pass);
    CHECK(var->detail.find("first differs at (") != std::string::npos);
  }
  SUBCASE("riemann margins are recorded") {
    const CrossCheckReport rep = cross_check(2, 192);
    CHECK(rep.precision == 192);
    for (const auto& c : rep.checks)
      if (c.name.rfind("riemann_", 0) == 0) {
        CHECK(c.pass);
        CHECK(std::stod(c.margin) > 0.0);
      }
  }
  SUBCASE("genus below 2 is rejected") {
    CHECK_THROWS_AS(cross_check(1), std::invalid_argument);
  }
}

} // TEST_SUITE
