#include "tlhecke/intmat.hpp"

namespace arith {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Int> IntMat::mul_vec(const std::vector<Int>& x) const {
  std::vector<Int> y(r_, Int(0));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

IntMat IntMat::mul(const IntMat& o) const {
  IntMat y(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.c_; ++j) y.at(i, j) += at(i, k) * o.at(k, j);
    }
  return y;
}

namespace {

struct Worker {
  IntMat a, u, uinv;

  // Row ops keep U*original = a; Uinv absorbs the inverse op on columns.
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
    for (int k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
    for (int k = 0; k < uinv.rows(); ++k) std::swap(uinv.at(k, i), uinv.at(k, j));
  }
  void add_row(int i, int j, const Int& f) {  // row_i += f * row_j
    if (f == 0) return;
    for (int k = 0; k < a.cols(); ++k) a.at(i, k) += f * a.at(j, k);
    for (int k = 0; k < u.cols(); ++k) u.at(i, k) += f * u.at(j, k);
    for (int k = 0; k < uinv.rows(); ++k) uinv.at(k, j) -= f * uinv.at(k, i);
  }
  void negate_row(int i) {
    for (int k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
    for (int k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
    for (int k = 0; k < uinv.rows(); ++k) uinv.at(k, i) = -uinv.at(k, i);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
  }
  void add_col(int i, int j, const Int& f) {  // col_i += f * col_j
    if (f == 0) return;
    for (int k = 0; k < a.rows(); ++k) a.at(k, i) += f * a.at(k, j);
  }
  void negate_col(int i) {
    for (int k = 0; k < a.rows(); ++k) a.at(k, i) = -a.at(k, i);
  }
};

}  // namespace

SmithForm smith_form(IntMat m) {
  const int rows = m.rows(), cols = m.cols();
  Worker w{std::move(m), IntMat::identity(rows), IntMat::identity(rows)};
  const int t = std::min(rows, cols);

  for (int s = 0; s < t; ++s) {
    // find a nonzero pivot of minimal absolute value in the trailing block
    for (;;) {
      int pi = -1, pj = -1;
      Int best;
      for (int i = s; i < rows; ++i)
        for (int j = s; j < cols; ++j) {
          const Int& x = w.a.at(i, j);
          if (x == 0) continue;
          Int ax = abs(x);
          if (pi < 0 || ax < best) { best = ax; pi = i; pj = j; }
        }
      if (pi < 0) break;  // trailing block is zero
      w.swap_rows(s, pi);
      w.swap_cols(s, pj);
      if (w.a.at(s, s) < 0) w.negate_row(s);

      bool again = false;
      for (int i = s + 1; i < rows; ++i) {
        if (w.a.at(i, s) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, s).get_mpz_t(), w.a.at(s, s).get_mpz_t());
        w.add_row(i, s, -q);
        if (w.a.at(i, s) != 0) again = true;
      }
      for (int j = s + 1; j < cols; ++j) {
        if (w.a.at(s, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a.at(s, j).get_mpz_t(), w.a.at(s, s).get_mpz_t());
        w.add_col(j, s, -q);
        if (w.a.at(s, j) != 0) again = true;
      }
      if (again) continue;

      // pivot now lone; enforce divisibility of the trailing block
      bool fixed = true;
      for (int i = s + 1; i < rows && fixed; ++i)
        for (int j = s + 1; j < cols && fixed; ++j)
          if (!mpz_divisible_p(w.a.at(i, j).get_mpz_t(), w.a.at(s, s).get_mpz_t())) {
            w.add_row(s, i, Int(1));
            fixed = false;
          }
      if (fixed) break;
    }
  }

  SmithForm out;
  out.diag.resize(t);
  for (int i = 0; i < t; ++i) out.diag[i] = w.a.at(i, i);
  out.U = std::move(w.u);
  out.Uinv = std::move(w.uinv);
  return out;
}

}  // namespace arith
