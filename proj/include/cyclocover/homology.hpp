#pragma once

#include "cyclocover/chords.hpp"
#include "cyclocover/intmat.hpp"

namespace cyclocover {

// Cyclic cover of P^1 branched over {0, 1, infinity}: y^p = x^l (1-x)^m.
// Validity: p odd >= 5, l and m positive, gcd(l, m) = 1, l + m < p - 1.
// The hyperelliptic family y^q = x(1-x) is the l = m = 1 member; composite
// odd q is allowed there (and anywhere l, m stay invertible mod p).
struct CurveSpec {
  int p = 0, l = 0, m = 0;
  int genus() const { return (p - 1) / 2; }
  bool hyperelliptic() const { return l == 1 && m == 1; }
  bool operator==(const CurveSpec&) const = default;
};

CurveSpec make_curve_spec(int p, int l, int m); // throws std::invalid_argument

/*
 * Intersection matrix of the loops c_1..c_{p-1} around the fibre over the
 * branch cut: with i_l in {1..p-1} the residue of i*l^{-1} mod p (same for m),
 *   c_i . c_j = +1  if j_l > i_l and j_m > i_m,
 *              -1  if j_l < i_l and j_m < i_m,
 *               0  otherwise.
 * Throws std::domain_error when l or m is not invertible mod p.
 */
IntMat intersection_matrix(const CurveSpec& spec);

// M_s(i,j) (entry (i,j) = -1) resp. M_o(i,j) (+1); i, j 1-based, i != j.
IntMat transvection(int n, int i, int j, SlidePosition pos);

// s_{i,j}(A) or o_{i,j}(A): conjugation M A M^T by the matching transvection.
// Requires skew-symmetric A; the result is skew-symmetric.
IntMat apply_slide(const IntMat& A, int i, int j, SlidePosition pos);

struct Cq1Reduction {
  IntMat A;                    // strictly-upper-ones skew form
  IntMat Tprime;               // T' with T' A T'^T = j_blocks(g)
  IntMat T;                    // odd-rows-first reordering of T'
  std::vector<IntMat> after_f; // intersection matrix after each stage f_k
  SlideRecord record;          // diagram-backed slides; transform == T
  ChordDiagram diagram;        // final diagram (goal endpoint series)
};

// Runs the hyperelliptic slide pipeline f_{g-1} o ... o f_1 with
// h_{i,k} = o_{i,2k-1} o s_{i,2k} on the cut diagram, checks the J-block
// form, and returns T with T A T^T = [[0, I_g], [-I_g, 0]].  g >= 2.
Cq1Reduction reduce_cq1(int g);

struct KleinReduction {
  IntMat A;            // intersection matrix of (7,1,2)
  IntMat M;            // product of the selected transvection sequence
  IntMat T;            // permutation * M
  IntMat TAT;          // T A T^T
  bool six_factor_ok;  // selected six-move sequence reaches the standard form
  bool five_move_ok;   // the shorter five-move candidate (kept for reporting)
  SlideRecord record;  // matrix-level moves; transform == T
};

// The curated reduction for y^7 = x (1-x)^2: transvections
// s(2,1), o(5,1), s(5,3), o(5,2), o(6,2), s(6,4) in application order,
// then the relabeling c3' = c5, c4' = c3, c5' = c4.
KleinReduction reduce_klein();

// Basis matrix of the hyperelliptic a/b-loop system: A-row i has -1 at
// column 2i-1 and +1 at column 2i; B-row i alternates -1,+1,...,-1 through
// column 2i-1 (1-based columns).
IntMat natural_basis_K(int g);

// Anti-diagonal permutation L_g (an involution).
IntMat reversal_L(int g);

// H = (K^T)^{-1} T^T; equals [[O, I_g], [-I_g, -I_g]].
IntMat basis_change_H(int g);

// Integer symplectic reduction of any skew-symmetric unimodular A:
// returns T with T A T^T = [[0, I_g], [-I_g, 0]].  Deterministic pivot
// choice: smallest (|A_ij|, i, j) among nonzero entries of the active block.
// Throws std::domain_error on odd dimension, non-skew, or non-unimodular
// input.
IntMat reduce_generic(const IntMat& A);

} // namespace cyclocover
