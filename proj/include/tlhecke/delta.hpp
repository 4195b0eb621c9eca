#pragma once

#include <optional>
#include <vector>

#include "tlhecke/arith.hpp"

namespace arith {

// Univariate polynomial in the loop parameter d (= [2]) over Z.
// Coefficients are indexed by degree; trailing zeros are trimmed, so the
// zero polynomial is the empty vector.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  explicit DeltaPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static DeltaPoly constant(Int n);
  static DeltaPoly delta();  // the monomial d

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Int(0); }
  const Int& leading() const { return c_.back(); }
  // d-adic valuation: index of the lowest nonzero coefficient (0 for units,
  // meaningless for the zero polynomial).
  int valuation() const;
  Int eval_zero() const { return coeff(0); }
  Rat eval(const Rat& x) const;

  DeltaPoly operator+(const DeltaPoly& o) const;
  DeltaPoly operator-(const DeltaPoly& o) const;
  DeltaPoly operator-() const;
  DeltaPoly operator*(const DeltaPoly& o) const;
  DeltaPoly operator*(const Int& n) const;
  bool operator==(const DeltaPoly& o) const { return c_ == o.c_; }

  Int content() const;  // gcd of coefficients, sign of leading coefficient
  DeltaPoly primitive_part() const;

  // Exact division; fails with NonPolynomialQuotient if the remainder is
  // nonzero or the division leaves Z[d].
  DeltaPoly exact_div(const DeltaPoly& o) const;
  std::optional<DeltaPoly> try_exact_div(const DeltaPoly& o) const;

  std::string str(const std::string& var = "d") const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Gcd in Z[d]: product of the content gcd with a primitive gcd of the
// primitive parts, normalized to positive leading coefficient.
DeltaPoly poly_gcd(const DeltaPoly& a, const DeltaPoly& b);

// Element of the fraction field of Z[d].  Invariants: nonzero denominator,
// gcd(num, den) = 1 (including integer contents), den has positive leading
// coefficient.
class DeltaRational {
 public:
  DeltaRational() : num_(), den_(DeltaPoly::constant(1)) {}
  DeltaRational(DeltaPoly num, DeltaPoly den);
  explicit DeltaRational(DeltaPoly num) : num_(std::move(num)), den_(DeltaPoly::constant(1)) {}
  static DeltaRational of_int(long n) { return DeltaRational(DeltaPoly::constant(Int(n))); }

  const DeltaPoly& num() const { return num_; }
  const DeltaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  DeltaRational operator+(const DeltaRational& o) const;
  DeltaRational operator-(const DeltaRational& o) const;
  DeltaRational operator-() const;
  DeltaRational operator*(const DeltaRational& o) const;
  DeltaRational operator/(const DeltaRational& o) const;
  bool operator==(const DeltaRational& o) const { return num_ == o.num_ && den_ == o.den_; }

  // Specialization at d = 0.  Fails with PoleAtZero when the reduced
  // fraction has a pole there.
  Rat eval_zero() const;

  std::string str() const;

 private:
  void normalize();
  DeltaPoly num_, den_;
};

// Quantum integer [n]: [0] = 0, [1] = 1, [n+1] = [2][n] - [n-1] with [2] = d.
DeltaPoly quantum_int(int n);

// Irreducible factor tower of the quantum integers:
// [n] = prod_{e | n, e > 1} psi(e).  psi(2) = d is the only factor vanishing
// at d = 0.
const DeltaPoly& psi_factor(int e);

// Quantum binomial coefficient in Z[d], computed as a product of exact
// quotients (each partial product is again a quantum binomial, so every
// division is exact).
DeltaPoly quantum_binom(int n, int k);

// d = 0 specializations of all quantum binomials with n <= max_n.
// Verified internally against the four-case closed form
//   [2a  choose 2b]   ->  C(a,b)
//   [2a+1 choose 2b]  ->  (-1)^b C(a,b)
//   [2a  choose 2b+1] ->  0
//   [2a+1 choose 2b+1]->  (-1)^(a+b) C(a,b)
// and reported as a triangular table t[n][k].
std::vector<std::vector<Int>> binom_spec_table(int max_n);

std::vector<long> reduce_mod_p(const DeltaPoly& f, long p);

}  // namespace arith
