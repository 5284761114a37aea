#pragma once

#include <initializer_list>
#include <vector>

namespace cyclocover {

// Dense integer matrix.  Entries stay tiny for everything computed here
// (transvections, permutations, basis-change products), so int64 suffices;
// exact unimodularity checks go through the rational-matrix determinant.
class IntMat {
public:
  IntMat() = default;
  IntMat(int rows, int cols); // zero-filled
  IntMat(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMat identity(int n);
  static IntMat std_symplectic_form(int g); // [[0, I_g], [-I_g, 0]]
  static IntMat j_blocks(int g);            // diag of g blocks [[0,1],[-1,0]]
  // P such that (P*M) row i equals M row rows[i]; `rows` is 0-based.
  static IntMat row_permutation(const std::vector<int>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long operator()(int i, int j) const { return a_[i * cols_ + j]; }
  long long& at(int i, int j) { return a_[i * cols_ + j]; }

  IntMat operator*(const IntMat& o) const;
  IntMat transpose() const;
  // this * A * this^T
  IntMat congruence(const IntMat& A) const;
  bool operator==(const IntMat& o) const = default;

  bool is_skew_symmetric() const;
  std::vector<std::vector<long long>> to_rows() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<long long> a_;
};

// Membership in Sp(2g, Z): M * J * M^T == J for the standard form J.
// Throws std::invalid_argument on non-square or odd-dimension input.
bool is_symplectic_Z(const IntMat& M);

} // namespace cyclocover
