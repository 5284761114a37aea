#pragma once

#include "cyclocover/chords.hpp"
#include "cyclocover/periods.hpp"
#include "cyclocover/verify.hpp"

#include <json.hpp>

#include <string>

namespace cyclocover {

// {"q": 7, "coeffs": ["0","1","-2/3","0","0","0","0"]} - length q, index k =
// coefficient of zeta^k, canonical (top entries "0").
nlohmann::json to_json(const CycloNum& a);
CycloNum cyclo_from_json(const nlohmann::json& j);

// {"rows":..,"cols":..,"q":..,"entries":[[CycloNum...]...]}
nlohmann::json to_json(const CycloMat& m);
// plain nested integer arrays
nlohmann::json to_json(const IntMat& m);

// [{"move":"5̄","along":"1","position":"opposite"}, ...]; matrix-level
// moves (no endpoint information) drop the bar.
nlohmann::json to_json(const SlideRecord& r);

nlohmann::json to_json(const CurveSpec& spec);

nlohmann::json basis_json(const CurveSpec& spec, const IntMat& A,
                          const IntMat& T, const IntMat& TAT,
                          const SlideRecord& record);

// PeriodResult; numeric_bits > 0 appends "tau_numeric" as [re, im] decimal
// string pairs at that precision.
nlohmann::json to_json(const PeriodResult& r, int numeric_bits = 0);

nlohmann::json to_json(const CrossCheckReport& r);

std::string to_latex(const CycloNum& a); // "1+\zeta^{2}" style, ascending
std::string to_latex(const CycloMat& m); // array environment
std::string to_text(const CycloNum& a);  // "1 + 2*zeta^2" style, ascending
std::string to_text(const PeriodResult& r);

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s); // throws std::invalid_argument
std::string construction_name(Construction c);
Construction construction_from_name(const std::string& s);

} // namespace cyclocover
