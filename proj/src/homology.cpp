#include "cyclocover/homology.hpp"

#include "cyclocover/matrix.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclocover {

namespace {

int mod_inverse(int a, int p) { // p small; brute force is plenty
  const int r = ((a % p) + p) % p;
  for (int t = 1; t < p; ++t)
    if (r * t % p == 1) return t;
  return 0;
}

// Exact integer matrix from a rational CycloMat; throws on non-integral.
IntMat to_int(const CycloMat& m) {
  IntMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const CycloNum& v = m(i, j);
      if (!v.is_rational())
        throw std::logic_error("expected a rational matrix entry");
      const Rational r = v.rational_part();
      if (r.get_den() != 1)
        throw std::logic_error("expected an integer matrix entry");
      out.at(i, j) = r.get_num().get_si();
    }
  return out;
}

std::vector<int> odd_rows_first(int g) {
  std::vector<int> perm(2 * g);
  for (int i = 0; i < g; ++i) {
    perm[i] = 2 * i;         // rows 1,3,5,... (1-based)
    perm[g + i] = 2 * i + 1; // rows 2,4,6,...
  }
  return perm;
}

} // namespace

CurveSpec make_curve_spec(int p, int l, int m) {
  if (p < 5 || p % 2 == 0)
    throw std::invalid_argument("cover degree p must be odd and >= 5");
  if (l < 1 || m < 1)
    throw std::invalid_argument("branch exponents l, m must be positive");
  if (std::gcd(l, m) != 1)
    throw std::invalid_argument("branch exponents must be coprime");
  if (l + m >= p - 1)
    throw std::invalid_argument("need l + m < p - 1");
  return CurveSpec{p, l, m};
}

IntMat intersection_matrix(const CurveSpec& spec) {
  const int p = spec.p;
  const int linv = mod_inverse(spec.l, p);
  const int minv = mod_inverse(spec.m, p);
  if (!linv)
    throw std::domain_error("l = " + std::to_string(spec.l) +
                            " is not invertible mod " + std::to_string(p));
  if (!minv)
    throw std::domain_error("m = " + std::to_string(spec.m) +
                            " is not invertible mod " + std::to_string(p));
  const int n = p - 1;
  IntMat A(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int dl = j * linv % p - i * linv % p;
      const int dm = j * minv % p - i * minv % p;
      A.at(i - 1, j - 1) = (dl > 0 && dm > 0) ? 1 : (dl < 0 && dm < 0) ? -1 : 0;
    }
  return A;
}

IntMat transvection(int n, int i, int j, SlidePosition pos) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("bad transvection indices");
  IntMat m = IntMat::identity(n);
  m.at(i - 1, j - 1) = pos == SlidePosition::same ? -1 : 1;
  return m;
}

IntMat apply_slide(const IntMat& A, int i, int j, SlidePosition pos) {
  if (!A.is_skew_symmetric())
    throw std::invalid_argument("slides act on skew-symmetric matrices");
  return transvection(A.rows(), i, j, pos).congruence(A);
}

Cq1Reduction reduce_cq1(int g) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  const int n = 2 * g;
  Cq1Reduction out;
  ChordDiagram d = ChordDiagram::cq1_initial(g);
  out.A = d.initial_intersections();
  SlideRecord rec;
  rec.transform = IntMat::identity(n);
  // Stage f_k slides the tails i > 2k over the pair (2k-1, 2k): first the
  // barred end over bar(2k) (same kind), then over 2k-1 (opposite kind).
  for (int k = 1; k < g; ++k) {
    for (int i = 2 * k + 1; i <= n; ++i) {
      d = d.slide({i, true}, {2 * k, true}, &rec);
      d = d.slide({i, true}, {2 * k - 1, false}, &rec);
    }
    out.after_f.push_back(d.intersections());
  }
  out.Tprime = d.homology();
  if (d.intersections() != IntMat::j_blocks(g) || rec.transform != out.Tprime)
    throw std::logic_error("hyperelliptic reduction lost its invariant");
  const IntMat P = IntMat::row_permutation(odd_rows_first(g));
  out.T = P * out.Tprime;
  rec.transform = out.T;
  if (out.T.congruence(out.A) != IntMat::std_symplectic_form(g))
    throw std::logic_error("hyperelliptic reduction failed the defining identity");
  out.record = std::move(rec);
  out.diagram = std::move(d);
  return out;
}

KleinReduction reduce_klein() {
  KleinReduction out;
  out.A = intersection_matrix(make_curve_spec(7, 1, 2));
  struct Move {
    int i, j;
    SlidePosition pos;
  };
  // Application order; the five-move variant drops the s(5,3) step.
  const std::vector<Move> six = {
      {2, 1, SlidePosition::same},     {5, 1, SlidePosition::opposite},
      {5, 3, SlidePosition::same},     {5, 2, SlidePosition::opposite},
      {6, 2, SlidePosition::opposite}, {6, 4, SlidePosition::same}};
  const std::vector<Move> five = {
      {2, 1, SlidePosition::same},     {5, 1, SlidePosition::opposite},
      {5, 2, SlidePosition::opposite}, {6, 2, SlidePosition::opposite},
      {6, 4, SlidePosition::same}};
  auto product = [](const std::vector<Move>& moves) {
    IntMat M = IntMat::identity(6);
    for (const auto& mv : moves)
      M = transvection(6, mv.i, mv.j, mv.pos) * M;
    return M;
  };
  // Relabeling c3' = c5, c4' = c3, c5' = c4 after the slides.
  const IntMat P = IntMat::row_permutation({0, 1, 4, 2, 3, 5});
  const IntMat J = IntMat::std_symplectic_form(3);
  const IntMat M6 = product(six);
  const IntMat M5 = product(five);
  out.six_factor_ok = (P * M6).congruence(out.A) == J;
  out.five_move_ok = (P * M5).congruence(out.A) == J;
  out.M = M6;
  out.T = P * M6;
  out.TAT = out.T.congruence(out.A);
  for (const auto& mv : six)
    out.record.steps.push_back({mv.i, false, false, mv.j, mv.pos});
  out.record.transform = out.T;
  return out;
}

IntMat natural_basis_K(int g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  const int n = 2 * g;
  IntMat K(n, n);
  for (int i = 1; i <= g; ++i) {
    K.at(i - 1, 2 * i - 2) = -1;
    K.at(i - 1, 2 * i - 1) = 1;
    for (int j = 1; j <= 2 * i - 1; ++j)
      K.at(g + i - 1, j - 1) = j % 2 ? -1 : 1;
  }
  return K;
}

IntMat reversal_L(int g) {
  IntMat L(g, g);
  for (int i = 0; i < g; ++i) L.at(i, g - 1 - i) = 1;
  return L;
}

IntMat basis_change_H(int g) {
  const IntMat T = reduce_cq1(g).T;
  const IntMat K = natural_basis_K(g);
  const CycloMat kt_inv = mat_inverse(CycloMat::from_int(K.transpose(), 1));
  return to_int(kt_inv * CycloMat::from_int(T.transpose(), 1));
}

IntMat reduce_generic(const IntMat& A0) {
  const int n = A0.rows();
  if (n != A0.cols() || n % 2 != 0)
    throw std::domain_error("need an even-dimensional square matrix");
  if (!A0.is_skew_symmetric())
    throw std::domain_error("matrix is not skew-symmetric");
  const int g = n / 2;
  IntMat B = A0;
  IntMat E = IntMat::identity(n);

  // row_dst += f * row_src, tracked on E and congruently on B (row and the
  // matching column), so B == E * A0 * E^T throughout.
  auto row_op = [&](int dst, int src, long long f) {
    for (int j = 0; j < n; ++j) E.at(dst, j) += f * E(src, j);
    for (int j = 0; j < n; ++j) B.at(dst, j) += f * B(src, j);
    for (int i = 0; i < n; ++i) B.at(i, dst) += f * B(i, src);
  };
  auto row_swap = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < n; ++j) {
      std::swap(E.at(a, j), E.at(b, j));
      std::swap(B.at(a, j), B.at(b, j));
    }
    for (int i = 0; i < n; ++i) std::swap(B.at(i, a), B.at(i, b));
  };

  for (int blk = 0; blk < n; blk += 2) {
    for (;;) {
      // Deterministic pivot: minimal (|B_ij|, i, j) over the active block.
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = blk; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const long long av = std::llabs(B(i, j));
          if (av && (pi < 0 || av < best)) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) throw std::domain_error("degenerate skew form");
      row_swap(pi, blk);
      row_swap(pj, blk + 1);
      const long long b = B(blk, blk + 1);
      bool exact = true;
      for (int r = blk + 2; r < n; ++r) {
        long long v = B(r, blk + 1);
        if (v) {
          if (const long long f = -(v / b)) row_op(r, blk, f);
          if (B(r, blk + 1)) exact = false;
        }
        v = B(r, blk); // row blk+1 contributes -b at column blk
        if (v) {
          if (const long long f = v / b) row_op(r, blk + 1, f);
          if (B(r, blk)) exact = false;
        }
      }
      if (!exact) continue; // smaller remainders exist; re-pivot
      if (B(blk, blk + 1) < 0) row_swap(blk, blk + 1);
      if (B(blk, blk + 1) != 1)
        throw std::domain_error("matrix is not unimodular over Z");
      break;
    }
  }

  const IntMat T = IntMat::row_permutation(odd_rows_first(g)) * E;
  if (T.congruence(A0) != IntMat::std_symplectic_form(g))
    throw std::logic_error("symplectic reduction failed the defining identity");
  return T;
}

} // namespace cyclocover
