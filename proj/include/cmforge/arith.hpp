#pragma once

// Exact integer and rational primitives: factorization, valuations,
// Kronecker symbols and local Hilbert symbols.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cmforge {

struct PrimePower {
  int64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of a positive integer. Primes are strictly increasing.
struct Factorization {
  int64_t value = 1;
  std::vector<PrimePower> factors;

  bool operator==(const Factorization&) const = default;
};

/// Reduced fraction with positive denominator. Arithmetic is checked: an
/// intermediate that leaves the int64 range raises InternalError.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design of arithmetic
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A place of Q: a finite prime or the archimedean place.
class Place {
 public:
  static Place infinity() { return Place(0); }
  static Place prime(int64_t q);

  bool is_infinite() const { return q_ == 0; }
  int64_t p() const { return q_; }
  bool operator==(const Place&) const = default;

 private:
  explicit Place(int64_t q) : q_(q) {}
  int64_t q_;
};

int64_t gcd(int64_t a, int64_t b);
int64_t mod(int64_t a, int64_t m);  // result in [0, m)
int64_t isqrt(int64_t n);           // floor(sqrt(n)), n >= 0
bool is_square(int64_t n);
bool is_prime(int64_t n);
bool is_squarefree(int64_t n);

Factorization factorize(int64_t n);
std::vector<int64_t> prime_divisors(int64_t n);
std::vector<int64_t> divisors(int64_t n);

/// Kronecker symbol (a|n). Requires (a, n) != (0, 0).
int kronecker(int64_t a, int64_t n);

/// q-adic valuation. Throws InvalidArgument for x = 0.
int ord(int64_t x, int64_t q);
int ord(const Rational& x, int64_t q);

/// Local Hilbert symbol (a, b)_v. Throws InvalidArgument on zero input.
int hilbert_symbol(const Rational& a, const Rational& b, Place v);

/// Negative fundamental discriminant test (the argument must be negative).
bool is_fundamental_discriminant(int64_t disc);

}  // namespace cmforge
