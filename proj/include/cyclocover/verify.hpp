#pragma once

#include "cyclocover/matrix.hpp"

#include <string>
#include <vector>

namespace cyclocover {

struct RiemannReport {
  bool symmetric = false;
  int asym_row = -1, asym_col = -1; // 0-based witness when not symmetric
  bool posdef = false;              // Im(embed(tau)) numerically > 0
  bool conclusive = false;          // margin above the precision threshold
  std::string margin;               // smallest factorization pivot
  int precision = 0;
  bool pass() const { return symmetric && posdef && conclusive; }
};

// Exact symmetry check, then LDL^T factorization of Im(embed(tau)) at the
// given precision.  Margins below 2^{-precision/2} are reported inconclusive
// rather than failed (honest numerics atop exact data).
RiemannReport check_riemann(const CycloMat& tau, int precision_bits = 128);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail; // human-readable evidence (first mismatch, variant
                      // selection, ...); empty when nothing to add
  std::string margin; // numeric margin when applicable
};

struct CrossCheckReport {
  int g = 0, q = 0, precision = 0;
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

// End-to-end identity ledger for the hyperelliptic curve y^q = x(1-x),
// q = 2g+1: slide reduction, basis-change structure, closed form vs direct
// (both hat variants), the -tau^{-1}+I relation, the Schindler recurrence vs
// reversal, the cyclotomic product identity, and Riemann checks on every
// produced tau.  For g = 3 it also runs the Klein-quartic pipeline and
// records which transvection sequence reaches the standard form.
CrossCheckReport cross_check(int g, int precision_bits = 128);

// Pi_{l=1}^{q-1} (1 - zeta^l) == q, exactly.
bool product_identity_holds(int q);

} // namespace cyclocover
