#include "cmforge/quadforms.hpp"

#include <cmath>
#include <map>
#include <string>

#include "cmforge/arith.hpp"
#include "cmforge/errors.hpp"

namespace cmforge {

namespace {

void require_fundamental(int64_t disc) {
  if (disc >= 0 || !is_fundamental_discriminant(disc))
    throw InvalidArgument(std::to_string(disc) + " is not a negative fundamental discriminant");
}

// Translate b into (-a, a] by tau -> tau + k.
QuadraticForm normalize(const QuadraticForm& f) {
  const int64_t k = static_cast<int64_t>(std::floor(static_cast<long double>(f.a - f.b) / (2 * f.a)));
  QuadraticForm g{f.a, f.b + 2 * f.a * k, f.a * k * k + f.b * k + f.c};
  return g;
}

}  // namespace

bool QuadraticForm::is_primitive() const { return gcd(gcd(a, b), c) == 1; }

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f) {
  return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
}

bool is_reduced(const QuadraticForm& f) {
  const int64_t ab = f.b < 0 ? -f.b : f.b;
  if (!(ab <= f.a && f.a <= f.c)) return false;
  if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

QuadraticForm reduce(const QuadraticForm& f) {
  if (!f.is_positive_definite()) throw InvalidArgument("reduce requires a positive-definite form");
  QuadraticForm g = normalize(f);
  while (true) {
    if (g.a > g.c) {
      g = normalize(QuadraticForm{g.c, -g.b, g.a});
      continue;
    }
    if (g.a == g.c && g.b < 0) g.b = -g.b;
    return g;
  }
}

std::vector<QuadraticForm> reduced_forms(int64_t disc) {
  require_fundamental(disc);
  const int64_t n = -disc;
  std::vector<QuadraticForm> out;
  for (int64_t a = 1; 3 * a * a <= n; ++a) {
    for (int64_t b = -a + 1; b <= a; ++b) {
      if ((b * b + n) % (4 * a) != 0) continue;
      const int64_t c = (b * b + n) / (4 * a);
      QuadraticForm f{a, b, c};
      if (is_reduced(f) && f.is_primitive()) out.push_back(f);
    }
  }
  return out;
}

int64_t class_number(int64_t disc) { return static_cast<int64_t>(reduced_forms(disc).size()); }

std::vector<int64_t> admissible_residues(int64_t disc, int64_t p) {
  require_fundamental(disc);
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::vector<int64_t> out;
  for (int64_t beta = 0; beta < 2 * p; ++beta)
    if (mod(beta * beta - disc, 4 * p) == 0) out.push_back(beta);
  return out;
}

std::vector<QuadraticForm> heegner_reps(int64_t disc, int64_t p, int64_t beta) {
  require_fundamental(disc);
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  beta = mod(beta, 2 * p);
  if (mod(beta * beta - disc, 4 * p) != 0)
    throw InvalidArgument("residue " + std::to_string(beta) + " is not admissible: beta^2 != " +
                          std::to_string(disc) + " mod " + std::to_string(4 * p));

  const int64_t h = class_number(disc);
  const auto bound = static_cast<int64_t>(
      std::ceil(2.0 * static_cast<double>(p) * static_cast<double>(h) * std::sqrt(static_cast<double>(-disc))));

  // one window b in (-a, a], b = beta mod 2p, per leading coefficient a
  std::map<QuadraticForm, QuadraticForm> by_class;
  for (int64_t a = p; a <= bound && static_cast<int64_t>(by_class.size()) < h; a += p) {
    const int64_t start = -a + 1 + mod(beta - (-a + 1), 2 * p);
    for (int64_t b = start; b <= a; b += 2 * p) {
      if ((b * b - disc) % (4 * a) != 0) continue;
      QuadraticForm f{a, b, (b * b - disc) / (4 * a)};
      if (!f.is_primitive()) continue;
      by_class.try_emplace(reduce(f), f);
    }
  }
  if (static_cast<int64_t>(by_class.size()) != h)
    throw InternalError("heegner_reps: search bound exhausted for disc " + std::to_string(disc) +
                        ", p " + std::to_string(p));

  std::vector<QuadraticForm> out;
  out.reserve(by_class.size());
  for (const auto& [reduced, rep] : by_class) out.push_back(rep);
  return out;
}

HeegnerPoint heegner_point(const QuadraticForm& f) {
  if (!f.is_positive_definite()) throw InvalidArgument("heegner_point requires a positive-definite form");
  return HeegnerPoint{f.b, f.a, f.discriminant()};
}

}  // namespace cmforge
