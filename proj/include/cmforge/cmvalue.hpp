#pragma once

// Arithmetic ingredients of the incoherent Eisenstein coefficients for
// k = Q(sqrt(-D)): ideal counts, ramification counts and the local
// obstruction set Diff(m).

#include <cstdint>
#include <vector>

#include "cmforge/arith.hpp"

namespace cmforge {

/// k = Q(sqrt(-D)) with -D fundamental and D > 4 (so w(k) = 2), and the
/// norm N(a) of the lattice ideal.
class KappaContext {
 public:
  KappaContext(int64_t D, int64_t ideal_norm);

  int64_t D() const { return D_; }
  int64_t ideal_norm() const { return ideal_norm_; }
  static constexpr int kUnitCount = 2;  // w(k)

 private:
  int64_t D_;
  int64_t ideal_norm_;
};

/// Number of integral ideals of norm n in the ring of integers of Q(sqrt(-D)).
int64_t rho(int64_t n, int64_t D);

/// rho at a rational argument that must be a positive integer. A fractional
/// argument raises IntegralityError naming `what`.
int64_t rho_checked(const Rational& n, int64_t D, const char* what);

/// Number of primes q | D with ord_q(m D) > 0.
int o_of_m(const Rational& m, int64_t D);

/// Primes q with (-m N(a), -D)_q = -1, ascending.
std::vector<int64_t> diff_set(const Rational& m, const KappaContext& ctx);

}  // namespace cmforge
