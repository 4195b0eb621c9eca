#include "tlhecke/delta.hpp"

#include <map>
#include <sstream>

namespace arith {

DeltaPoly DeltaPoly::constant(Int n) {
  if (n == 0) return DeltaPoly();
  return DeltaPoly(std::vector<Int>{std::move(n)});
}

DeltaPoly DeltaPoly::delta() { return DeltaPoly(std::vector<Int>{Int(0), Int(1)}); }

void DeltaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int DeltaPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

Rat DeltaPoly::eval(const Rat& x) const {
  Rat r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

DeltaPoly DeltaPoly::operator+(const DeltaPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return DeltaPoly(std::move(r));
}

DeltaPoly DeltaPoly::operator-(const DeltaPoly& o) const { return *this + (-o); }

DeltaPoly DeltaPoly::operator-() const {
  std::vector<Int> r = c_;
  for (auto& x : r) x = -x;
  return DeltaPoly(std::move(r));
}

DeltaPoly DeltaPoly::operator*(const DeltaPoly& o) const {
  if (is_zero() || o.is_zero()) return DeltaPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return DeltaPoly(std::move(r));
}

DeltaPoly DeltaPoly::operator*(const Int& n) const {
  if (n == 0) return DeltaPoly();
  std::vector<Int> r = c_;
  for (auto& x : r) x *= n;
  return DeltaPoly(std::move(r));
}

Int DeltaPoly::content() const {
  Int g(0);
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (!is_zero() && leading() < 0) g = -g;
  return g;
}

DeltaPoly DeltaPoly::primitive_part() const {
  if (is_zero()) return DeltaPoly();
  Int g = content();
  std::vector<Int> r = c_;
  for (auto& x : r) x /= g;
  return DeltaPoly(std::move(r));
}

std::optional<DeltaPoly> DeltaPoly::try_exact_div(const DeltaPoly& o) const {
  if (o.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return DeltaPoly();
  if (degree() < o.degree()) return std::nullopt;
  std::vector<Int> rem = c_;
  std::vector<Int> quot(degree() - o.degree() + 1, Int(0));
  const Int& lead = o.leading();
  for (int i = degree(); i >= o.degree(); --i) {
    Int& top = rem[i];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Int q = top / lead;
    int shift = i - o.degree();
    for (int j = 0; j <= o.degree(); ++j) rem[shift + j] -= q * o.c_[j];
    quot[shift] = q;
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return DeltaPoly(std::move(quot));
}

DeltaPoly DeltaPoly::exact_div(const DeltaPoly& o) const {
  auto q = try_exact_div(o);
  if (!q) fail(Errc::NonPolynomialQuotient, "(" + str() + ") / (" + o.str() + ")");
  return *q;
}

std::string DeltaPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[i];
    if (a == 0) continue;
    if (!first) out << (a > 0 ? "+" : "-");
    else if (a < 0) out << "-";
    Int mag = abs(a);
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i > 0) {
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

namespace {

// Primitive gcd via rational Euclid on the primitive parts, rescaled back
// into Z[d].  Sizes here are small (degrees well under a hundred).
DeltaPoly primitive_gcd(DeltaPoly a, DeltaPoly b) {
  auto to_rat = [](const DeltaPoly& f) {
    std::vector<Rat> r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = Rat(f.coeffs()[i]);
    return r;
  };
  std::vector<Rat> u = to_rat(a), v = to_rat(b);
  auto deg = [](const std::vector<Rat>& f) { return static_cast<int>(f.size()) - 1; };
  auto trim = [](std::vector<Rat>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  trim(u); trim(v);
  while (!v.empty()) {
    // u mod v
    while (deg(u) >= deg(v) && !u.empty()) {
      Rat q = u.back() / v.back();
      int shift = deg(u) - deg(v);
      for (size_t j = 0; j < v.size(); ++j) u[shift + j] -= q * v[j];
      trim(u);
    }
    std::swap(u, v);
  }
  if (u.empty()) return DeltaPoly();
  // clear denominators, take primitive part
  Int lcm(1);
  for (const auto& q : u) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> w(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    Rat scaled = u[i] * lcm;
    w[i] = scaled.get_num();
  }
  DeltaPoly g = DeltaPoly(std::move(w)).primitive_part();
  return g;
}

}  // namespace

DeltaPoly poly_gcd(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.is_zero()) {
    if (b.is_zero()) return DeltaPoly();
    return b.leading() > 0 ? b : -b;
  }
  if (b.is_zero()) return a.leading() > 0 ? a : -a;
  Int gc;
  mpz_gcd(gc.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  Int ga = abs(a.content()), gb = abs(b.content());
  mpz_gcd(gc.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
  return primitive_gcd(a.primitive_part(), b.primitive_part()) * gc;
}

DeltaRational::DeltaRational(DeltaPoly num, DeltaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::DivisionByZero, "zero denominator in fraction field of Z[d]");
  normalize();
}

void DeltaRational::normalize() {
  if (num_.is_zero()) {
    den_ = DeltaPoly::constant(1);
    return;
  }
  DeltaPoly g = poly_gcd(num_, den_);
  num_ = num_.exact_div(g);
  den_ = den_.exact_div(g);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

DeltaRational DeltaRational::operator+(const DeltaRational& o) const {
  return DeltaRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

DeltaRational DeltaRational::operator-(const DeltaRational& o) const {
  return DeltaRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

DeltaRational DeltaRational::operator-() const { return DeltaRational(-num_, den_); }

DeltaRational DeltaRational::operator*(const DeltaRational& o) const {
  return DeltaRational(num_ * o.num_, den_ * o.den_);
}

DeltaRational DeltaRational::operator/(const DeltaRational& o) const {
  if (o.is_zero()) fail(Errc::DivisionByZero, "division by zero in fraction field of Z[d]");
  return DeltaRational(num_ * o.den_, den_ * o.num_);
}

Rat DeltaRational::eval_zero() const {
  if (num_.is_zero()) return Rat(0);
  int vn = num_.valuation();
  int vd = den_.valuation();
  if (vn < vd) fail(Errc::PoleAtZero, str());
  if (vn > vd) return Rat(0);
  Rat r(num_.coeff(vn), den_.coeff(vd));
  r.canonicalize();
  return r;
}

std::string DeltaRational::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

DeltaPoly quantum_int(int n) {
  if (n < 0) fail(Errc::SchemaError, "quantum integer of negative index");
  DeltaPoly prev;                        // [0]
  DeltaPoly cur = DeltaPoly::constant(1);  // [1]
  if (n == 0) return prev;
  const DeltaPoly d = DeltaPoly::delta();
  for (int i = 1; i < n; ++i) {
    DeltaPoly next = d * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

const DeltaPoly& psi_factor(int e) {
  static std::map<int, DeltaPoly> cache;
  if (e < 2) fail(Errc::SchemaError, "psi factor index must be >= 2");
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  DeltaPoly f = quantum_int(e);
  for (int d = 2; d < e; ++d)
    if (e % d == 0) f = f.exact_div(psi_factor(d));
  return cache.emplace(e, std::move(f)).first->second;
}

DeltaPoly quantum_binom(int n, int k) {
  if (k < 0 || k > n) fail(Errc::SchemaError, "quantum binomial requires 0 <= k <= n");
  // prod_{i=1..k} [n-k+i]/[i]; every partial product is a quantum binomial,
  // so each division is exact.  A failed division would mean the quotient
  // left Z[d].
  DeltaPoly t = DeltaPoly::constant(1);
  for (int i = 1; i <= k; ++i) {
    t = t * quantum_int(n - k + i);
    auto q = t.try_exact_div(quantum_int(i));
    if (!q) fail(Errc::NonPolynomialQuotient, "quantum binomial (" + std::to_string(n) + ", " + std::to_string(k) + ")");
    t = std::move(*q);
  }
  return t;
}

std::vector<std::vector<Int>> binom_spec_table(int max_n) {
  if (max_n < 0) fail(Errc::SchemaError, "binom_spec_table requires max_n >= 0");
  std::vector<std::vector<Int>> table(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    table[n].resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      Int v = quantum_binom(n, k).eval_zero();
      // four-case closed form
      int a = n / 2, b = k / 2;
      Int cab;
      mpz_bin_uiui(cab.get_mpz_t(), a, b);
      Int expect;
      if (n % 2 == 0 && k % 2 == 0) expect = cab;
      else if (n % 2 == 1 && k % 2 == 0) expect = (b % 2 ? -cab : cab);
      else if (n % 2 == 0 && k % 2 == 1) expect = 0;
      else expect = ((a + b) % 2 ? -cab : cab);
      if (v != expect)
        fail(Errc::NonPolynomialQuotient,
             "specialized quantum binomial disagrees with closed form at (" +
                 std::to_string(n) + ", " + std::to_string(k) + ")");
      table[n][k] = std::move(v);
    }
  }
  return table;
}

std::vector<long> reduce_mod_p(const DeltaPoly& f, long p) {
  if (!is_prime(p)) fail(Errc::SchemaError, "characteristic must be prime");
  std::vector<long> r(f.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(p));
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace arith
