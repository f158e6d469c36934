#pragma once

// Exact evaluation of the CM value norm
//   prod_{Q_D} prod_{Q_d} |j*_p(tau_{Q_D}) - j*_p(tau_{Q_d})|^8
// as a formal sum of prime logarithms, from lattice terms m(beta, y, n).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmforge/arith.hpp"

namespace cmforge {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent on log q for primes q dividing D.
///  of_mD: ord_q(m D) * rho(m D)
///  of_m:  ord_q(m) * rho(m D)
enum class RamifiedExponent { of_mD, of_m };

const char* to_string(RamifiedExponent v);
RamifiedExponent parse_ramified_exponent(const std::string& s);

/// (p, d, D, mu, beta, g) with -d, -D distinct fundamental discriminants,
/// d, D > 4, mu^2 = -D and beta^2 = -d (mod 4p). mu and beta are stored
/// lifted to [0, 2p); g = gcd(mu, 2p), which is 2p when mu = 0.
struct GZParams {
  int64_t p;
  int64_t d;
  int64_t D;
  int64_t mu;
  int64_t beta;
  int64_t g;

  /// Validates and normalizes; InvalidArgument on any violated condition.
  static GZParams make(int64_t p, int64_t d, int64_t beta, int64_t D, int64_t mu);
  /// Same, with the smallest admissible residues.
  static GZParams with_default_residues(int64_t p, int64_t d, int64_t D);

  /// (d, beta) <-> (D, mu).
  GZParams swapped() const;
};

struct LatticeTerm {
  int64_t n;
  int64_t y;
  int64_t t;   // g mu (+-beta) - 2 n p D - 2 g p y
  Rational m;  // d / 4p - t^2 / (4 g^2 p D)
  int sign;    // +1 for the beta sum, -1 for the (-beta) sum
};

/// sum_q e_q log q with exact exponents.
class PrimeLogSum {
 public:
  void add(int64_t q, const Rational& e);
  void merge(const PrimeLogSum& other);

  const std::map<int64_t, Rational>& exponents() const { return exponents_; }
  bool is_zero() const { return exponents_.empty(); }
  bool has_nonnegative_integer_exponents() const;
  long double value() const;

  bool operator==(const PrimeLogSum&) const = default;

 private:
  std::map<int64_t, Rational> exponents_;  // zero exponents are never stored
};

/// Every admissible term of both sums, ordered by (sign, y, n) with the
/// beta sum first.
std::vector<LatticeTerm> enumerate_terms(const GZParams& params);

/// Contribution of a single term: 2^(o(m)+1) times the inert or ramified
/// coefficient of the unique prime in Diff(m), or zero when |Diff(m)| != 1.
/// The lattice sum alone yields the fourth-power norm; the extra factor 2
/// makes the total the log of the eighth-power norm.
PrimeLogSum term_contribution(const LatticeTerm& term, const GZParams& params,
                              RamifiedExponent variant = RamifiedExponent::of_mD);

/// log of the eighth-power norm.
PrimeLogSum gz_log_norm(const GZParams& params, RamifiedExponent variant = RamifiedExponent::of_mD);

/// prod q^(e_q / 8): exact integer when every e_q is a multiple of 8,
/// otherwise only the radical expression is available.
struct NormMagnitude {
  std::map<int64_t, Rational> root_exponents;
  bool integral = true;
  BigInt value = 1;        // valid when integral
  std::string expression;  // e.g. "7*31", "2^(1/2)", "1"
};

NormMagnitude norm_magnitude(const PrimeLogSum& log_norm);

}  // namespace cmforge
