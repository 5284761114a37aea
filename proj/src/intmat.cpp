#include "cyclocover/intmat.hpp"

#include <stdexcept>

namespace cyclocover {

IntMat::IntMat(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::std_symplectic_form(int g) {
  IntMat m(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    m.at(i, g + i) = 1;
    m.at(g + i, i) = -1;
  }
  return m;
}

IntMat IntMat::j_blocks(int g) {
  IntMat m(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    m.at(2 * i, 2 * i + 1) = 1;
    m.at(2 * i + 1, 2 * i) = -1;
  }
  return m;
}

IntMat IntMat::row_permutation(const std::vector<int>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] < 0 || rows[i] >= n)
      throw std::invalid_argument("permutation index out of range");
    m.at(i, rows[i]) = 1;
  }
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in mul");
  IntMat out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const long long v = (*this)(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += v * o(k, j);
    }
  return out;
}

IntMat IntMat::transpose() const {
  IntMat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = (*this)(i, j);
  return out;
}

IntMat IntMat::congruence(const IntMat& A) const {
  return *this * A * this->transpose();
}

bool IntMat::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j <= i; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

std::vector<std::vector<long long>> IntMat::to_rows() const {
  std::vector<std::vector<long long>> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    out[i].resize(cols_);
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

bool is_symplectic_Z(const IntMat& M) {
  if (M.rows() != M.cols() || M.rows() % 2 != 0)
    throw std::invalid_argument("symplectic test needs even square dimension");
  const IntMat J = IntMat::std_symplectic_form(M.rows() / 2);
  return M.congruence(J) == J;
}

} // namespace cyclocover
