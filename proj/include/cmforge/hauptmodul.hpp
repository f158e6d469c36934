#pragma once

// High-precision evaluation of Dedekind eta and of Hauptmoduls on the Fricke
// groups Gamma_0*(p), and the numeric left-hand side of the CM value norm.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "cmforge/quadforms.hpp"

namespace cmforge {

using Real = boost::multiprecision::mpfr_float;

struct PrecisionConfig {
  int decimal_digits = 80;
  int guard_digits = 10;
  int64_t max_terms = 1'000'000;

  int working_digits() const { return decimal_digits + guard_digits; }
};

/// Sets the MPFR default precision for the current thread and restores the
/// previous value on destruction.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionConfig& prec);
  explicit ScopedPrecision(int digits10);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
  Complex operator-() const { return {-re, -im}; }
};

Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, int n);
Real pi();

/// Exact CM point as a complex number at the current precision.
Complex to_complex(const HeegnerPoint& pt);

/// eta(tau) = q^(1/24) prod (1 - q^n) via the pentagonal-number series.
Complex eta(const Complex& tau, const PrecisionConfig& prec);

/// Truncated Fourier expansion q^-1 + c(0) + c(1) q + ... of a Hauptmodul.
struct QSeries {
  enum class Source { eta_closed_form, data_file };

  int64_t p = 0;
  std::vector<boost::multiprecision::cpp_int> coefficients;  // c(-1), c(0), c(1), ...
  Source source = Source::data_file;
};

/// Text format: "p <prime>", "count <N>", then N integers c(-1), c(0), ...
/// one per line. Blank lines and '#' comments are skipped. Rejected unless
/// c(-1) = 1 and exactly N coefficients follow.
QSeries parse_qseries(std::istream& in);
QSeries load_qseries(const std::string& path);

/// Primes with a built-in eta-quotient Hauptmodul.
bool has_eta_quotient(int64_t p);
/// p^(12/(p-1)) for the eta-quotient primes.
int64_t fricke_constant(int64_t p);

/// t + p^(12/(p-1)) / t with t = (eta(tau)/eta(p tau))^(24/(p-1)); evaluated
/// at tau exactly as given, without moving the point.
Complex eta_quotient_hauptmodul(int64_t p, const Complex& tau, const PrecisionConfig& prec);

/// Moves tau by translations and the Fricke involution to a point of larger
/// imaginary part, |Re tau| <= 1/2.
Complex reduce_fricke(const Complex& tau, int64_t p);

struct HauptmodulEvaluation {
  Complex value;
  Real error_bound;  // absolute
};

HauptmodulEvaluation hauptmodul_evaluate(int64_t p, const Complex& tau, const PrecisionConfig& prec,
                                         const QSeries* series = nullptr);
Complex hauptmodul_value(int64_t p, const Complex& tau, const PrecisionConfig& prec,
                         const QSeries* series = nullptr);

struct LhsResult {
  Real value;           // 8 sum_{Q_D} sum_{Q_d} log|j*(tau_{Q_D}) - j*(tau_{Q_d})|
  double error_estimate;
};

LhsResult lhs_log_norm(int64_t p, int64_t d, int64_t beta, int64_t D, int64_t mu, const PrecisionConfig& prec,
                       const QSeries* series = nullptr);

}  // namespace cmforge
