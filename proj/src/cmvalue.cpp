#include "cmforge/cmvalue.hpp"

#include <algorithm>
#include <string>

#include "cmforge/errors.hpp"

namespace cmforge {

KappaContext::KappaContext(int64_t D, int64_t ideal_norm) : D_(D), ideal_norm_(ideal_norm) {
  if (D <= 4) throw InvalidArgument("|D| must exceed 4, got " + std::to_string(D));
  if (!is_fundamental_discriminant(-D))
    throw InvalidArgument("-" + std::to_string(D) + " is not a fundamental discriminant");
  if (ideal_norm < 1) throw InvalidArgument("ideal norm must be positive");
}

int64_t rho(int64_t n, int64_t D) {
  if (n < 1) throw InvalidArgument("rho requires n >= 1");
  int64_t count = 1;
  for (const auto& [q, e] : factorize(n).factors) {
    switch (kronecker(-D, q)) {
      case 1:
        count *= e + 1;
        break;
      case -1:
        if (e % 2 == 1) return 0;
        break;
      default:
        break;
    }
  }
  return count;
}

int64_t rho_checked(const Rational& n, int64_t D, const char* what) {
  if (!n.is_integer() || n.num() < 1)
    throw IntegralityError(std::string(what) + " = " + n.to_string() + " is not a positive integer");
  return rho(n.num(), D);
}

int o_of_m(const Rational& m, int64_t D) {
  if (m.sign() <= 0) throw InvalidArgument("o(m) requires m > 0");
  const Rational mD = m * Rational(D);
  int count = 0;
  for (int64_t q : prime_divisors(D))
    if (ord(mD, q) > 0) ++count;
  return count;
}

std::vector<int64_t> diff_set(const Rational& m, const KappaContext& ctx) {
  if (m.sign() <= 0) throw InvalidArgument("Diff(m) requires m > 0");
  // At any other odd prime both arguments are units and the symbol is +1.
  std::vector<int64_t> candidates{2};
  for (int64_t n : {ctx.D(), m.num(), m.den(), ctx.ideal_norm()})
    for (int64_t q : prime_divisors(n)) candidates.push_back(q);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const Rational a = -m * Rational(ctx.ideal_norm());
  const Rational b(-ctx.D());
  std::vector<int64_t> out;
  for (int64_t q : candidates)
    if (hilbert_symbol(a, b, Place::prime(q)) == -1) out.push_back(q);
  return out;
}

}  // namespace cmforge
