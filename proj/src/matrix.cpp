#include "cyclocover/matrix.hpp"

#include <string>
#include <utility>

namespace cyclocover {

SingularMatrixError::SingularMatrixError(int col)
    : std::domain_error("singular matrix (no pivot in column " +
                        std::to_string(col) + ")"),
      pivot_col(col) {}

namespace {
CycloNum field_one(int q) {
  return q == 1 ? CycloNum(1L) : CycloNum::from_coeffs(q, {Rational(1)});
}
} // namespace

CycloMat::CycloMat(int rows, int cols, int q)
    : rows_(rows), cols_(cols), q_(q),
      e_(static_cast<size_t>(rows) * cols,
         q == 1 ? CycloNum() : CycloNum::from_coeffs(q, {})) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
}

CycloMat CycloMat::identity(int n, int q) {
  CycloMat m(n, n, q);
  const CycloNum one = field_one(q);
  for (int i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

CycloMat CycloMat::from_int(const IntMat& src, int q) {
  CycloMat m(src.rows(), src.cols(), q);
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) {
      const long long v = src(i, j);
      if (!v) continue;
      m.set(i, j, CycloNum(static_cast<long>(v)));
    }
  return m;
}

void CycloMat::set(int i, int j, const CycloNum& v) {
  if (v.q() == q_) {
    e_[i * cols_ + j] = v;
    return;
  }
  if (v.q() == 1) { // promote the rational constant into the matrix field
    e_[i * cols_ + j] =
        q_ == 1 ? v : CycloNum::from_coeffs(q_, {v.rational_part()});
    return;
  }
  throw std::invalid_argument("entry field q=" + std::to_string(v.q()) +
                              " does not match matrix field q=" +
                              std::to_string(q_));
}

CycloMat CycloMat::operator*(const CycloMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in mul");
  const int q = q_ == 1 ? o.q_ : q_;
  if (q_ != o.q_ && q_ != 1 && o.q_ != 1)
    throw std::invalid_argument("field mismatch in mul");
  CycloMat out(rows_, o.cols_, q);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycloNum& v = (*this)(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o(k, j).is_zero()) continue;
        out.set(i, j, out(i, j) + v * o(k, j));
      }
    }
  return out;
}

CycloMat CycloMat::operator+(const CycloMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape mismatch in add");
  CycloMat out(rows_, cols_, q_ == 1 ? o.q_ : q_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, (*this)(i, j) + o(i, j));
  return out;
}

CycloMat CycloMat::operator-(const CycloMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape mismatch in sub");
  CycloMat out(rows_, cols_, q_ == 1 ? o.q_ : q_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, (*this)(i, j) - o(i, j));
  return out;
}

CycloMat CycloMat::operator-() const {
  CycloMat out(rows_, cols_, q_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, -(*this)(i, j));
  return out;
}

CycloMat CycloMat::transpose() const {
  CycloMat out(cols_, rows_, q_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

bool CycloMat::operator==(const CycloMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != o(i, j)) return false;
  return true;
}

bool CycloMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

CycloNum mat_det(const CycloMat& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const int n = a.rows();
  CycloMat m = a;
  CycloNum det = field_one(a.q());
  bool negate = false;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return a.q() == 1 ? CycloNum() : CycloNum::from_coeffs(a.q(), {});
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        CycloNum tmp = m(col, j);
        m.set(col, j, m(piv, j));
        m.set(piv, j, tmp);
      }
      negate = !negate;
    }
    det = det * m(col, col);
    const CycloNum inv = inverse(m(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const CycloNum f = m(r, col) * inv;
      for (int j = col; j < n; ++j) m.set(r, j, m(r, j) - f * m(col, j));
    }
  }
  return negate ? -det : det;
}

CycloMat mat_inverse(const CycloMat& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("inverse of non-square matrix");
  const int n = a.rows();
  CycloMat m = a;
  CycloMat inv = CycloMat::identity(n, a.q());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularMatrixError(col);
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        CycloNum tmp = m(col, j);
        m.set(col, j, m(piv, j));
        m.set(piv, j, tmp);
        tmp = inv(col, j);
        inv.set(col, j, inv(piv, j));
        inv.set(piv, j, tmp);
      }
    const CycloNum pinv = inverse(m(col, col));
    for (int j = 0; j < n; ++j) {
      m.set(col, j, pinv * m(col, j));
      inv.set(col, j, pinv * inv(col, j));
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const CycloNum f = m(r, col);
      for (int j = 0; j < n; ++j) {
        m.set(r, j, m(r, j) - f * m(col, j));
        inv.set(r, j, inv(r, j) - f * inv(col, j));
      }
    }
  }
  return inv;
}

CycloNum sym_poly(int i, const std::vector<CycloNum>& xs) {
  const int n = static_cast<int>(xs.size());
  if (i < 0)
    throw std::invalid_argument("symmetric polynomial index out of range");
  int q = 1;
  for (const auto& x : xs)
    if (x.q() != 1) q = x.q();
  if (i > n) return q == 1 ? CycloNum() : CycloNum::from_coeffs(q, {});
  // e[d] accumulates sigma_d of the prefix processed so far
  std::vector<CycloNum> e(i + 1, q == 1 ? CycloNum() : CycloNum::from_coeffs(q, {}));
  e[0] = field_one(q);
  for (const auto& x : xs)
    for (int d = std::min<int>(i, n); d >= 1; --d)
      e[d] = e[d] + x * e[d - 1];
  return e[i];
}

CycloMat vandermonde_inverse(const std::vector<CycloNum>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw std::invalid_argument("empty point set");
  int q = 1;
  for (const auto& x : points)
    if (x.q() != 1) q = x.q();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("repeated Vandermonde points");

  CycloMat out(n, n, q);
  for (int j = 0; j < n; ++j) { // column j deletes point a_{j+1}
    std::vector<CycloNum> rest;
    rest.reserve(n - 1);
    CycloNum denom = field_one(q);
    for (int m = 0; m < n; ++m) {
      if (m == j) continue;
      rest.push_back(points[m]);
      denom = denom * (points[m] - points[j]);
    }
    const CycloNum dinv = inverse(denom);
    for (int i = 1; i <= n; ++i) {
      CycloNum v = sym_poly(n - i, rest) * dinv;
      if ((i - 1) % 2 == 1) v = -v;
      out.set(i - 1, j, v);
    }
  }
  return out;
}

} // namespace cyclocover
