#pragma once

#include <vector>

#include "tlhecke/arith.hpp"

namespace arith {

// Dense matrix over Z, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}
  static IntMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  std::vector<Int> mul_vec(const std::vector<Int>& x) const;
  IntMat mul(const IntMat& o) const;
  bool operator==(const IntMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

// Smith decomposition of A: invariant factors d[0] | d[1] | ... together
// with a unimodular row transform U (and its inverse) such that U*A*V is
// diagonal.  V is not retained; lattice membership and normal forms only
// need the row side.
struct SmithForm {
  std::vector<Int> diag;  // length min(rows, cols), trailing zeros allowed
  IntMat U;
  IntMat Uinv;
};

SmithForm smith_form(IntMat a);

}  // namespace arith
