#pragma once

// Positive-definite binary quadratic forms and Heegner representatives for
// Gamma_0(p).

#include <cstdint>
#include <ostream>
#include <vector>

namespace cmforge {

struct QuadraticForm {
  int64_t a = 0;
  int64_t b = 0;
  int64_t c = 0;

  int64_t discriminant() const { return b * b - 4 * a * c; }
  bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
  bool is_primitive() const;

  bool operator==(const QuadraticForm&) const = default;
  auto operator<=>(const QuadraticForm&) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f);

/// tau = (-b + i sqrt(|disc|)) / (2a), kept exact.
struct HeegnerPoint {
  int64_t b = 0;
  int64_t a = 1;
  int64_t disc = -4;

  bool operator==(const HeegnerPoint&) const = default;
};

/// Gauss-reduced SL2(Z)-representative: |b| <= a <= c, b >= 0 if |b| == a or a == c.
QuadraticForm reduce(const QuadraticForm& f);
bool is_reduced(const QuadraticForm& f);

/// Number of reduced primitive forms; disc must be a negative fundamental discriminant.
int64_t class_number(int64_t disc);

/// All reduced primitive forms of a negative fundamental discriminant.
std::vector<QuadraticForm> reduced_forms(int64_t disc);

/// All beta in [0, 2p) with beta^2 = disc (mod 4p).
std::vector<int64_t> admissible_residues(int64_t disc, int64_t p);

/// One primitive form (a, b, c) per Gamma_0(p)-class with p | a and
/// b = beta (mod 2p). Exactly class_number(disc) forms, ordered by their
/// SL2(Z)-reduction.
std::vector<QuadraticForm> heegner_reps(int64_t disc, int64_t p, int64_t beta);

HeegnerPoint heegner_point(const QuadraticForm& f);

}  // namespace cmforge
