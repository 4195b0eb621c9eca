#include "tlhecke/arith.hpp"

namespace arith {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPolynomialQuotient: return "NonPolynomialQuotient";
    case Errc::NonIntegralAtP: return "NonIntegralAtP";
    case Errc::CharacteristicMismatch: return "CharacteristicMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OddBoundary: return "OddBoundary";
    case Errc::ProfileMismatch: return "ProfileMismatch";
    case Errc::NotSquareProfile: return "NotSquareProfile";
    case Errc::ConfigurationAbsent: return "ConfigurationAbsent";
    case Errc::PoleAtZero: return "PoleAtZero";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::ProjectorMissing: return "ProjectorMissing";
    case Errc::ChiNotHomomorphism: return "ChiNotHomomorphism";
    case Errc::InvalidRealization: return "InvalidRealization";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NoBarInvolution: return "NoBarInvolution";
    case Errc::UnsupportedBackend: return "UnsupportedBackend";
    case Errc::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Fp::Fp(long value, long prime) : p(prime) {
  if (!is_prime(prime)) fail(Errc::SchemaError, "characteristic must be prime, got " + std::to_string(prime));
  v = value % p;
  if (v < 0) v += p;
}

static void check_fp(Fp a, Fp b) {
  if (a.p != b.p)
    fail(Errc::CharacteristicMismatch,
         "GF(" + std::to_string(a.p) + ") vs GF(" + std::to_string(b.p) + ")");
}

Fp operator+(Fp a, Fp b) { check_fp(a, b); return Fp(a.v + b.v, a.p); }
Fp operator-(Fp a, Fp b) { check_fp(a, b); return Fp(a.v - b.v, a.p); }
Fp operator-(Fp a) { return Fp(-a.v, a.p); }
Fp operator*(Fp a, Fp b) { check_fp(a, b); return Fp(a.v * b.v, a.p); }
bool operator==(Fp a, Fp b) { return a.p == b.p && a.v == b.v; }

long mod_pow(long base, long exp, long p) {
  base %= p;
  if (base < 0) base += p;
  long r = 1;
  while (exp > 0) {
    if (exp & 1) r = (r * base) % p;
    base = (base * base) % p;
    exp >>= 1;
  }
  return r;
}

long mod_inverse(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p) + ")");
  // extended Euclid
  long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t; t = new_t; new_t = tmp;
    tmp = r - q * new_r; r = new_r; new_r = tmp;
  }
  if (t < 0) t += p;
  return t;
}

Fp inverse(Fp a) { return Fp(mod_inverse(a.v, a.p), a.p); }

Scalar Scalar::rational(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::zero(long characteristic) {
  return characteristic == 0 ? Scalar(Rat(0)) : Scalar(Fp(0, characteristic));
}

Scalar Scalar::one(long characteristic) {
  return characteristic == 0 ? Scalar(Rat(1)) : Scalar(Fp(1, characteristic));
}

long Scalar::characteristic() const {
  return is_rational() ? 0 : std::get<Fp>(v_).p;
}

bool Scalar::is_zero() const {
  return is_rational() ? std::get<Rat>(v_) == 0 : std::get<Fp>(v_).is_zero();
}

const Rat& Scalar::rat() const {
  if (!is_rational()) fail(Errc::CharacteristicMismatch, "expected a rational scalar");
  return std::get<Rat>(v_);
}

Fp Scalar::fp() const {
  if (is_rational()) fail(Errc::CharacteristicMismatch, "expected a prime-field scalar");
  return std::get<Fp>(v_);
}

void Scalar::check_same(const Scalar& o) const {
  if (characteristic() != o.characteristic())
    fail(Errc::CharacteristicMismatch,
         "characteristic " + std::to_string(characteristic()) + " vs " +
             std::to_string(o.characteristic()));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (is_rational()) return Scalar(Rat(rat() + o.rat()));
  return Scalar(fp() + o.fp());
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (is_rational()) return Scalar(Rat(rat() - o.rat()));
  return Scalar(fp() - o.fp());
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rat(-rat()));
  return Scalar(-fp());
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (is_rational()) return Scalar(Rat(rat() * o.rat()));
  return Scalar(fp() * o.fp());
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero scalar");
  if (is_rational()) return Scalar(Rat(1 / rat()));
  return Scalar(arith::inverse(fp()));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Scalar::one(characteristic());
  Scalar b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (characteristic() != o.characteristic()) return false;
  if (is_rational()) return rat() == o.rat();
  return fp() == o.fp();
}

bool Scalar::operator<(const Scalar& o) const {
  check_same(o);
  if (is_rational()) return rat() < o.rat();
  return fp().v < o.fp().v;
}

std::string Scalar::str() const {
  if (is_rational()) return rat().get_str();
  return std::to_string(fp().v);
}

Scalar Scalar::parse(const std::string& s, long characteristic) {
  Rat q;
  if (q.set_str(s, 10) != 0) fail(Errc::SchemaError, "bad scalar literal '" + s + "'");
  q.canonicalize();
  if (characteristic == 0) return Scalar(q);
  return Scalar(reduce_mod_p(q, characteristic));
}

Fp reduce_mod_p(const Rat& q, long p) {
  if (!is_prime(p)) fail(Errc::SchemaError, "characteristic must be prime, got " + std::to_string(p));
  Int den = q.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
    fail(Errc::NonIntegralAtP, "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  long n = mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p));
  long d = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p));
  return Fp(n * mod_inverse(d, p), p);
}

}  // namespace arith
