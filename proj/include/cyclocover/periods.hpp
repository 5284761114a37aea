#pragma once

#include "cyclocover/homology.hpp"
#include "cyclocover/matrix.hpp"

#include <utility>
#include <vector>

namespace cyclocover {

/*
 * Holomorphic 1-form x^{alpha_l} (1-x)^{alpha_m} x^d dx / y^n on the cover,
 * with alpha_l = floor(n l / p), alpha_m = floor(n m / p) and
 * 0 <= d <= d_n = floor(n(l+m)/p) - alpha_l - alpha_m - 1.
 *
 * eigen_exponent e = (p - n) mod p drives every period: the deck
 * transformation scales the form by zeta^{-n}, so the normalized period over
 * c_j is 1 - zeta^{e j}.  beta_u/beta_v tag the Euler beta normalizer
 * B(u, v) making the base-interval integral 1; the tag is never evaluated
 * (periods are normalization-invariant).
 */
struct FormDescriptor {
  int n = 0, d = 0;
  int alpha_l = 0, alpha_m = 0, d_n = 0;
  int eigen_exponent = 0;
  Rational beta_u, beta_v;
};

// All (n, d) descriptors with d_n >= 0, ascending (n, d); count = genus.
std::vector<FormDescriptor> holomorphic_basis(const CurveSpec& spec);

// 1 - zeta_p^{e j}; j = 0 is the trivial loop (period 0).
CycloNum normalized_period(const FormDescriptor& form, int j,
                           const CurveSpec& spec);

// g x 2g matrix of normalized periods over c_1..c_{2g}, rows ordered by
// descending n (ascending eigen-exponent).
CycloMat raw_period_matrix(const CurveSpec& spec);

// (Omega_A, Omega_B): left/right g x g blocks of raw * basis^T.
std::pair<CycloMat, CycloMat> period_blocks(const CurveSpec& spec,
                                            const IntMat& basis);

enum class Basis { natural, chord_slide, schindler, klein };
enum class Construction { direct, closed_form, recurrence, transform };

// Which point the sigma-hat deletes in the closed form: the summation index
// k (consistent with the Vandermonde-inverse substitution; matches the
// direct computation) or the column index j (the displayed variant, retained
// for the discrepancy report).
enum class HatVariant { summation_index, column_index };

struct PeriodResult {
  CurveSpec curve;
  Basis basis = Basis::natural;
  Construction construction = Construction::direct;
  CycloMat tau;
};

// 2g x 2g integer basis matrix for the requested basis: natural -> K,
// chord_slide -> reduce_cq1 (hyperelliptic) or reduce_generic, schindler ->
// blockdiag(L, L) * K, klein -> the curated (7,1,2) reduction.
IntMat basis_matrix(const CurveSpec& spec, Basis basis);

// tau = Omega_A^{-1} Omega_B, exact; symmetry asserted.
PeriodResult period_matrix_direct(const CurveSpec& spec, Basis basis);

// Closed form for the natural-basis tau of y^q = x(1-x), q = 2g+1:
// entry (i,j) = sum_{k=1}^{g} (-1)^{i+g}/q * (1 - zeta^{2kj})
//               * sigma_{g-i}(zeta^2, ..., hat, ..., zeta^{2g})
//               * prod_{m=g-k+1}^{2g-k} (1 - zeta^{2m}).
PeriodResult period_matrix_closed_form(
    int g, HatVariant variant = HatVariant::summation_index);

// t_1 = (-1)^g zeta^{g^2}, t_2 = t_1 (1 - 1/(1+zeta)),
// t_{i+1} = t_1 (1 - sum_{k=2}^{i} zeta^{g-i+k-1} t_k t_{i-k+2}) / (1+zeta^{-i}).
std::vector<CycloNum> schindler_sequence(int g);

// s_{ij} = 1 - (1/t_1) sum_{k=1}^{i} t_k t_{j-i+k} for i <= j, symmetric.
PeriodResult schindler_tau(int g);

PeriodResult transform_cs(const PeriodResult& r);        // -tau^{-1} + I
PeriodResult transform_schindler(const PeriodResult& r); // L tau L

// tau' = (P + tau R)^{-1} (Q + tau S) for M = [[P, Q], [R, S]] in Sp(2g, Z).
CycloMat symplectic_action(const IntMat& M, const CycloMat& tau);

} // namespace cyclocover
