#pragma once

#include "cyclocover/cyclotomic.hpp"
#include "cyclocover/intmat.hpp"

#include <stdexcept>
#include <vector>

namespace cyclocover {

// Raised by inverse/solve on rank-deficient input; pivot_col is the 0-based
// column at which elimination found no nonzero pivot.
class SingularMatrixError : public std::domain_error {
public:
  explicit SingularMatrixError(int pivot_col);
  int pivot_col;
};

// Dense matrix over Q(zeta_q); all entries share one q (q == 1 for plain
// rational matrices).  set() promotes rational entries into the matrix field
// and rejects mismatched fields.  Operations return fresh matrices.
class CycloMat {
public:
  CycloMat() = default;
  CycloMat(int rows, int cols, int q);

  static CycloMat identity(int n, int q);
  static CycloMat from_int(const IntMat& m, int q);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int q() const { return q_; }

  const CycloNum& operator()(int i, int j) const { return e_[i * cols_ + j]; }
  void set(int i, int j, const CycloNum& v);

  CycloMat operator*(const CycloMat& o) const;
  CycloMat operator+(const CycloMat& o) const;
  CycloMat operator-(const CycloMat& o) const;
  CycloMat operator-() const;
  CycloMat transpose() const;
  bool operator==(const CycloMat& o) const;
  bool operator!=(const CycloMat& o) const { return !(*this == o); }

  bool is_symmetric() const;

private:
  int rows_ = 0, cols_ = 0, q_ = 1;
  std::vector<CycloNum> e_;
};

// Exact Gaussian elimination with first-nonzero pivot search (deterministic;
// no magnitude pivoting is needed over an exact field).
CycloNum mat_det(const CycloMat& a);
CycloMat mat_inverse(const CycloMat& a); // throws SingularMatrixError

// Elementary symmetric polynomial sigma_i of the given values; sigma_0 = 1
// and sigma_i = 0 for i beyond the number of values.
CycloNum sym_poly(int i, const std::vector<CycloNum>& xs);

/*
 * Closed-form inverse of the Vandermonde matrix V = (a_i^{j-1}) for pairwise
 * distinct points (Knuth): entry (i,j) is
 *   (-1)^{i-1} sigma_{n-i}(a_1,...,a_j-hat,...,a_n) / prod_{m != j} (a_m - a_j).
 * Throws std::invalid_argument on repeated points.
 */
CycloMat vandermonde_inverse(const std::vector<CycloNum>& points);

} // namespace cyclocover
