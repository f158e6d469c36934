#pragma once

// Hilbert class polynomials for j*_p from exact CM value norms: pairs
// (X_D, Y_D) over the class-number-one discriminants D, sign resolution, and
// exact interpolation.

#include <cstdint>
#include <string>
#include <vector>

#include "cmforge/gzrhs.hpp"
#include "cmforge/hauptmodul.hpp"

namespace cmforge {

enum class Sign { minus = -1, unresolved = 0, plus = 1 };

struct InterpolationPair {
  int64_t D = 0;
  BigInt x_mag;  // |j*(tau_D)| with j*(tau_base) = 0
  BigInt y_mag;  // prod over classes of d of |j*(tau_D) - j*(tau_d)|
  Sign x_sign = Sign::unresolved;
  Sign y_sign = Sign::unresolved;

  BigInt x() const;  // signed; requires resolved signs
  BigInt y() const;
};

/// Monic polynomial with integer coefficients, lowest degree first.
struct ClassPolynomial {
  int64_t d = 0;
  std::vector<BigInt> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  BigInt evaluate(const BigInt& x) const;
  std::string to_string() const;  // "X^4 - X^3 + 2*X^2 - 2*X + 1"
  bool operator==(const ClassPolynomial&) const = default;
};

bool is_genus_zero_fricke_prime(int64_t p);

/// Class-number-one fundamental discriminants -D that are squares mod 4p,
/// ordered by |D|.
std::vector<int64_t> s_set(int64_t p);
/// |D| for the members of s_set with |D| > 4.
std::vector<int64_t> usable_s_set(int64_t p);

/// h(-d) + 1 <= |usable S(p)|.
bool feasible(int64_t d, int64_t p);

std::vector<InterpolationPair> build_pairs(int64_t d, int64_t beta, int64_t p, int64_t base_D,
                                           RamifiedExponent variant = RamifiedExponent::of_mD);

enum class SignStrategy { search, numeric };

const char* to_string(SignStrategy s);
SignStrategy parse_sign_strategy(const std::string& s);

struct SignContext {
  int64_t p = 0;
  int64_t d = 0;
  int64_t beta = 0;
  int64_t base_D = 0;
  PrecisionConfig precision;
  const QSeries* series = nullptr;
};

/// search: every sign assignment (the largest-D pair with X != 0 pinned to
/// X > 0, which removes the X -> -X symmetry) whose interpolant through the
/// first h+1 pairs is monic, integral, of degree h and consistent with the
/// remaining pairs. numeric: signs read off high-precision Hauptmodul values.
std::vector<InterpolationPair> resolve_signs(const std::vector<InterpolationPair>& pairs, SignStrategy strategy,
                                             const SignContext& ctx);

/// Exact Lagrange interpolation through signed pairs; degree = pairs - 1.
ClassPolynomial interpolate(const std::vector<InterpolationPair>& pairs, int64_t d);

/// No factor of degree 1..n/2 over Z (root-subset search confirmed by exact division).
bool is_irreducible(const ClassPolynomial& poly);

struct ClassPolyOptions {
  int64_t base_D = 0;  // 0: smallest usable |D|
  int64_t beta = -1;   // -1: smallest admissible residue
  SignStrategy strategy = SignStrategy::search;
  RamifiedExponent variant = RamifiedExponent::of_mD;
  PrecisionConfig precision;
  const QSeries* series = nullptr;
};

struct ClassPolyResult {
  int64_t p = 0;
  int64_t d = 0;
  int64_t beta = 0;
  int64_t base_D = 0;
  int64_t class_number = 0;
  std::vector<int64_t> s_set;
  std::vector<InterpolationPair> pairs;  // signed
  ClassPolynomial polynomial;
};

/// Full pipeline; InfeasibleError when h(-d) + 1 > |usable S(p)|.
ClassPolyResult compute_class_polynomial(int64_t p, int64_t d, const ClassPolyOptions& opts = {});

}  // namespace cmforge
