#include "cyclocover/cli.hpp"

#include "cyclocover/homology.hpp"
#include "cyclocover/periods.hpp"
#include "cyclocover/serialize.hpp"
#include "cyclocover/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace cyclocover {

namespace {

int default_precision_bits() {
  if (const char* s = std::getenv("CYCLOCOVER_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 16 && v <= 65536) return static_cast<int>(v);
  }
  return 128;
}

int usage_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return 2;
}

int run_basis(std::ostream& out, std::ostream& err, int p, int l, int m,
              const std::string& method) {
  const CurveSpec spec = make_curve_spec(p, l, m);
  std::string chosen = method;
  if (chosen.empty())
    chosen = spec.hyperelliptic()          ? "cq1"
             : spec == CurveSpec{7, 1, 2} ? "klein"
                                          : "generic";
  if (chosen == "cq1") {
    if (!spec.hyperelliptic())
      return usage_error(err, "method cq1 needs l = m = 1");
    const Cq1Reduction red = reduce_cq1(spec.genus());
    out << basis_json(spec, red.A, red.T, red.T.congruence(red.A), red.record)
               .dump(2)
        << "\n";
    return 0;
  }
  if (chosen == "klein") {
    if (spec != CurveSpec{7, 1, 2})
      return usage_error(err, "method klein needs (p, l, m) = (7, 1, 2)");
    const KleinReduction red = reduce_klein();
    out << basis_json(spec, red.A, red.T, red.TAT, red.record).dump(2) << "\n";
    return red.six_factor_ok ? 0 : 1;
  }
  if (chosen == "generic") {
    const IntMat a = intersection_matrix(spec);
    const IntMat t = reduce_generic(a);
    SlideRecord record;
    record.transform = t;
    out << basis_json(spec, a, t, t.congruence(a), record).dump(2) << "\n";
    return 0;
  }
  return usage_error(err, "method must be one of cq1, klein, generic");
}

int run_periods(std::ostream& out, std::ostream& err, int q,
                const std::string& basis_s, const std::string& construction_s,
                const std::string& format, int numeric_bits) {
  const Basis basis = basis_from_name(basis_s);
  const Construction construction = construction_from_name(construction_s);
  if (format != "json" && format != "latex" && format != "text")
    return usage_error(err, "format must be one of json, latex, text");
  if (numeric_bits > 0 && format != "json")
    return usage_error(err, "--numeric requires --format json");

  const CurveSpec spec = basis == Basis::klein
                             ? make_curve_spec(7, 1, 2)
                             : make_curve_spec(q, 1, 1);
  if (basis == Basis::klein && q != 7)
    return usage_error(err, "the klein basis lives on the q = 7 cover");

  PeriodResult result;
  switch (construction) {
    case Construction::direct:
      result = period_matrix_direct(spec, basis);
      break;
    case Construction::closed_form:
      if (basis != Basis::natural)
        return usage_error(err, "closed-form is stated in the natural basis");
      result = period_matrix_closed_form(spec.genus());
      break;
    case Construction::recurrence:
      if (basis != Basis::schindler)
        return usage_error(err, "the recurrence is stated in the schindler basis");
      result = schindler_tau(spec.genus());
      break;
    case Construction::transform:
      if (basis == Basis::chord_slide)
        result = transform_cs(period_matrix_direct(spec, Basis::natural));
      else if (basis == Basis::schindler)
        result = transform_schindler(period_matrix_direct(spec, Basis::natural));
      else
        return usage_error(
            err, "transform produces the chord-slide or schindler basis");
      break;
  }

  if (format == "json")
    out << to_json(result, numeric_bits).dump(2) << "\n";
  else if (format == "latex")
    out << to_latex(result.tau) << "\n";
  else
    out << to_text(result);
  return 0;
}

int run_verify(std::ostream& out, int g, int precision,
               const std::string& format) {
  const CrossCheckReport rep = cross_check(g, precision);
  if (format == "json") {
    out << to_json(rep).dump(2) << "\n";
  } else {
    for (const CheckResult& c : rep.checks) {
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      if (!c.margin.empty()) out << "  margin=" << c.margin;
      out << "\n";
    }
    out << "g=" << rep.g << " q=" << rep.q << " precision=" << rep.precision
        << ": " << (rep.all_pass ? "all checks passed" : "CHECKS FAILED")
        << "\n";
  }
  return rep.all_pass ? 0 : 1;
}

int run_identity(std::ostream& out, int q) {
  const bool ok = product_identity_holds(q);
  out << "prod_{l=1}^{" << q - 1 << "} (1 - zeta^l) = " << q << ": "
      << (ok ? "verified" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "exact symplectic bases and period matrices for cyclic covers of the "
      "projective line branched over three points"};
  app.require_subcommand(1);

  int p = 0, l = 1, m = 1;
  std::string method;
  CLI::App* basis_cmd =
      app.add_subcommand("basis", "symplectic basis of H_1 via chord slides");
  basis_cmd->add_option("--p", p, "cover degree (odd, >= 5)")->required();
  basis_cmd->add_option("--l", l, "branch exponent at 0");
  basis_cmd->add_option("--m", m, "branch exponent at 1");
  basis_cmd->add_option("--method", method, "cq1, klein, or generic");

  int q = 0, numeric_bits = 0;
  std::string basis_s = "natural", construction_s = "direct", format = "text";
  CLI::App* periods_cmd =
      app.add_subcommand("periods", "exact period matrix over Q(zeta_q)");
  periods_cmd->add_option("--q", q, "cover degree (odd, >= 5)")->required();
  periods_cmd->add_option("--basis", basis_s,
                          "natural, chord-slide, schindler, or klein");
  periods_cmd->add_option("--construction", construction_s,
                          "direct, closed-form, recurrence, or transform");
  periods_cmd->add_option("--format", format, "json, latex, or text");
  periods_cmd->add_option("--numeric", numeric_bits,
                          "embed tau numerically at this many bits (json)");

  int g = 0, precision = default_precision_bits();
  std::string verify_format = "text";
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "cross-check every construction for y^q = x(1-x), q = 2g+1");
  verify_cmd->add_option("--g", g, "genus (>= 2)")->required();
  verify_cmd->add_option("--precision", precision,
                         "bits for the numeric Riemann check");
  verify_cmd->add_option("--format", verify_format, "json or text");

  int identity_q = 0;
  CLI::App* identity_cmd = app.add_subcommand(
      "identity", "check prod_{l=1}^{q-1} (1 - zeta^l) = q exactly");
  identity_cmd->add_option("--q", identity_q, "cover degree (odd, >= 5)")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (basis_cmd->parsed()) return run_basis(out, err, p, l, m, method);
    if (periods_cmd->parsed())
      return run_periods(out, err, q, basis_s, construction_s, format,
                         numeric_bits);
    if (verify_cmd->parsed()) return run_verify(out, g, precision, verify_format);
    if (identity_cmd->parsed()) return run_identity(out, identity_q);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace cyclocover
