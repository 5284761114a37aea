#include "cyclocover/serialize.hpp"

#include "cyclocover/embed.hpp"
#include "cyclocover/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace cyclocover {

namespace {

nlohmann::json coeff_array(const CycloNum& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& c : a.coeffs()) arr.push_back(to_string(c));
  return arr;
}

// Shared pretty-printer for both text and LaTeX polynomial output.
std::string poly_string(const CycloNum& a, const std::string& var,
                        bool latex) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto& cs = a.coeffs();
  bool first = true;
  for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
    const Rational& c = cs[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag_r = abs(c);
    std::string mag;
    if (latex && mag_r.get_den() != 1)
      mag = "\\frac{" + mag_r.get_num().get_str() + "}{" +
            mag_r.get_den().get_str() + "}";
    else
      mag = to_string(mag_r);
    std::string power;
    if (k == 1)
      power = var;
    else if (k > 1)
      power = latex ? var + "^{" + std::to_string(k) + "}"
                    : var + "^" + std::to_string(k);
    std::string term;
    if (k == 0)
      term = mag;
    else if (mag_r == 1)
      term = power;
    else
      term = latex ? mag + " " + power : mag + "*" + power;
    if (first) {
      out += (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

} // namespace

nlohmann::json to_json(const CycloNum& a) {
  return {{"q", a.q()}, {"coeffs", coeff_array(a)}};
}

CycloNum cyclo_from_json(const nlohmann::json& j) {
  const int q = j.at("q").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& s : j.at("coeffs"))
    coeffs.push_back(rational_from_string(s.get<std::string>()));
  return CycloNum::from_coeffs(q, coeffs);
}

nlohmann::json to_json(const CycloMat& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(coeff_array(m(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"q", m.q()},
          {"entries", std::move(entries)}};
}

nlohmann::json to_json(const IntMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const SlideRecord& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const SlideStep& s : r.steps) {
    steps.push_back(
        {{"move", s.endpoint_known
                      ? format_endpoint({s.moving_chord, s.moving_terminal})
                      : std::to_string(s.moving_chord)},
         {"along", std::to_string(s.along_chord)},
         {"position",
          s.position == SlidePosition::same ? "same" : "opposite"}});
  }
  return steps;
}

nlohmann::json to_json(const CurveSpec& spec) {
  return {{"p", spec.p}, {"l", spec.l}, {"m", spec.m}, {"genus", spec.genus()}};
}

nlohmann::json basis_json(const CurveSpec& spec, const IntMat& A,
                          const IntMat& T, const IntMat& TAT,
                          const SlideRecord& record) {
  return {{"curve", to_json(spec)},
          {"intersection_matrix", to_json(A)},
          {"T", to_json(T)},
          {"TAT", to_json(TAT)},
          {"slides", to_json(record)}};
}

nlohmann::json to_json(const PeriodResult& r, int numeric_bits) {
  nlohmann::json j = {{"curve", to_json(r.curve)},
                      {"basis", basis_name(r.basis)},
                      {"construction", construction_name(r.construction)},
                      {"q", r.tau.q()},
                      {"tau", to_json(r.tau)}};
  if (numeric_bits > 0) {
    ScopedPrecision guard(numeric_bits);
    nlohmann::json num = nlohmann::json::array();
    for (int i = 0; i < r.tau.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < r.tau.cols(); ++k) {
        const ComplexApprox z = embed_complex(r.tau(i, k), numeric_bits);
        row.push_back({z.re.str(0, std::ios_base::scientific),
                       z.im.str(0, std::ios_base::scientific)});
      }
      num.push_back(std::move(row));
    }
    j["tau_numeric"] = std::move(num);
    j["precision_bits"] = numeric_bits;
  }
  return j;
}

nlohmann::json to_json(const CrossCheckReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::json jc = {{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    if (!c.margin.empty()) jc["margin"] = c.margin;
    checks.push_back(std::move(jc));
  }
  return {{"g", r.g},
          {"q", r.q},
          {"precision_bits", r.precision},
          {"all_pass", r.all_pass},
          {"checks", std::move(checks)}};
}

std::string to_latex(const CycloNum& a) { return poly_string(a, "\\zeta", true); }

std::string to_latex(const CycloMat& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << " & ";
      os << to_latex(m(i, j));
    }
    os << (i + 1 < m.rows() ? " \\\\" : "") << "\n";
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string to_text(const CycloNum& a) { return poly_string(a, "zeta", false); }

std::string to_text(const PeriodResult& r) {
  std::ostringstream os;
  os << "period matrix for y^" << r.curve.p << " = x";
  if (r.curve.l != 1) os << "^" << r.curve.l;
  os << " (1-x)";
  if (r.curve.m != 1) os << "^" << r.curve.m;
  os << "  [g = " << r.curve.genus() << ", basis = " << basis_name(r.basis)
     << ", construction = " << construction_name(r.construction) << "]\n";
  for (int i = 0; i < r.tau.rows(); ++i) {
    os << "[ ";
    for (int j = 0; j < r.tau.cols(); ++j) {
      if (j) os << ",  ";
      os << to_text(r.tau(i, j));
    }
    os << " ]\n";
  }
  return os.str();
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::natural: return "natural";
    case Basis::chord_slide: return "chord-slide";
    case Basis::schindler: return "schindler";
    case Basis::klein: return "klein";
  }
  throw std::invalid_argument("unknown basis");
}

Basis basis_from_name(const std::string& s) {
  if (s == "natural") return Basis::natural;
  if (s == "chord-slide") return Basis::chord_slide;
  if (s == "schindler") return Basis::schindler;
  if (s == "klein") return Basis::klein;
  throw std::invalid_argument(
      "basis must be one of natural, chord-slide, schindler, klein");
}

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::direct: return "direct";
    case Construction::closed_form: return "closed-form";
    case Construction::recurrence: return "recurrence";
    case Construction::transform: return "transform";
  }
  throw std::invalid_argument("unknown construction");
}

Construction construction_from_name(const std::string& s) {
  if (s == "direct") return Construction::direct;
  if (s == "closed-form") return Construction::closed_form;
  if (s == "recurrence") return Construction::recurrence;
  if (s == "transform") return Construction::transform;
  throw std::invalid_argument(
      "construction must be one of direct, closed-form, recurrence, transform");
}

} // namespace cyclocover
