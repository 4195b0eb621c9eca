#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <variant>

namespace arith {

using Int = mpz_class;
using Rat = mpq_class;

// Error kinds shared across the library.  Each carries the name used in the
// operation contracts so callers can dispatch on the failure mode.
enum class Errc {
  NonPolynomialQuotient,
  NonIntegralAtP,
  CharacteristicMismatch,
  DivisionByZero,
  OddBoundary,
  ProfileMismatch,
  NotSquareProfile,
  ConfigurationAbsent,
  PoleAtZero,
  SizeLimit,
  ProjectorMissing,
  ChiNotHomomorphism,
  InvalidRealization,
  NotAHomomorphism,
  NoBarInvolution,
  UnsupportedBackend,
  SchemaError,
};

const char* errc_name(Errc c);

class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw MathError(code, what);
}

bool is_prime(long p);

// Element of GF(p), p a (small) prime.  Value is kept in [0, p).
struct Fp {
  long v = 0;
  long p = 0;

  Fp() = default;
  Fp(long value, long prime);

  bool is_zero() const { return v == 0; }
};

Fp operator+(Fp a, Fp b);
Fp operator-(Fp a, Fp b);
Fp operator-(Fp a);
Fp operator*(Fp a, Fp b);
Fp inverse(Fp a);
bool operator==(Fp a, Fp b);

long mod_pow(long base, long exp, long p);
long mod_inverse(long a, long p);

// Exact scalar: a rational number (characteristic 0) or a prime-field
// element.  Mixing characteristics in arithmetic is an error.
class Scalar {
 public:
  Scalar() : v_(Rat(0)) {}
  explicit Scalar(Rat q) : v_(std::move(q)) { std::get<Rat>(v_).canonicalize(); }
  explicit Scalar(Fp f) : v_(f) {}
  static Scalar rational(const Int& num, const Int& den);
  static Scalar integer(long n) { return Scalar(Rat(n)); }
  static Scalar of_field(long value, long p) { return Scalar(Fp(value, p)); }
  static Scalar zero(long characteristic);
  static Scalar one(long characteristic);

  long characteristic() const;
  bool is_zero() const;
  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const;
  Fp fp() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar pow(long e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;

  // Canonical form: "p/q" (or "n" when q = 1) for rationals, the reduced
  // residue for prime-field values.
  std::string str() const;
  static Scalar parse(const std::string& s, long characteristic);

 private:
  void check_same(const Scalar& o) const;
  std::variant<Rat, Fp> v_;
};

// Reduction of an exact rational mod p; the denominator must be a unit.
Fp reduce_mod_p(const Rat& q, long p);

}  // namespace arith
