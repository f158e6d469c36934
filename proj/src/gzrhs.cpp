#include "cmforge/gzrhs.hpp"

#include <cmath>
#include <sstream>

#include "cmforge/cmvalue.hpp"
#include "cmforge/errors.hpp"
#include "cmforge/quadforms.hpp"

namespace cmforge {

namespace {

using i128 = __int128;

int64_t floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<int64_t>(q);
}

int64_t ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

std::string describe(const LatticeTerm& t) {
  std::ostringstream os;
  os << "term(sign=" << (t.sign > 0 ? '+' : '-') << ", y=" << t.y << ", n=" << t.n << ", m=" << t.m << ")";
  return os.str();
}

void require_discriminant(int64_t x, const char* name) {
  if (x <= 4) throw InvalidArgument(std::string(name) + " must exceed 4, got " + std::to_string(x));
  if (!is_fundamental_discriminant(-x))
    throw InvalidArgument("-" + std::to_string(x) + " is not a fundamental discriminant");
}

int64_t smallest_residue(int64_t x, int64_t p) {
  const auto r = admissible_residues(-x, p);
  if (r.empty())
    throw InvalidArgument("-" + std::to_string(x) + " is not a square mod " + std::to_string(4 * p));
  return r.front();
}

}  // namespace

const char* to_string(RamifiedExponent v) { return v == RamifiedExponent::of_m ? "of_m" : "of_mD"; }

RamifiedExponent parse_ramified_exponent(const std::string& s) {
  if (s == "of_m") return RamifiedExponent::of_m;
  if (s == "of_mD") return RamifiedExponent::of_mD;
  throw InvalidArgument("ramified exponent must be of_m or of_mD, got '" + s + "'");
}

GZParams GZParams::make(int64_t p, int64_t d, int64_t beta, int64_t D, int64_t mu) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  require_discriminant(d, "d");
  require_discriminant(D, "D");
  if (d == D) throw InvalidArgument("d and D must be distinct");
  GZParams out{p, d, D, mod(mu, 2 * p), mod(beta, 2 * p), 0};
  if (mod(out.mu * out.mu + D, 4 * p) != 0)
    throw InvalidArgument("mu = " + std::to_string(mu) + " is not admissible: mu^2 != -" + std::to_string(D) +
                          " mod " + std::to_string(4 * p));
  if (mod(out.beta * out.beta + d, 4 * p) != 0)
    throw InvalidArgument("beta = " + std::to_string(beta) + " is not admissible: beta^2 != -" +
                          std::to_string(d) + " mod " + std::to_string(4 * p));
  out.g = gcd(out.mu, 2 * p);
  if (D % out.g != 0) throw InternalError("g does not divide D");
  return out;
}

GZParams GZParams::with_default_residues(int64_t p, int64_t d, int64_t D) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  require_discriminant(d, "d");
  require_discriminant(D, "D");
  return make(p, d, smallest_residue(d, p), D, smallest_residue(D, p));
}

GZParams GZParams::swapped() const { return make(p, D, mu, d, beta); }

void PrimeLogSum::add(int64_t q, const Rational& e) {
  if (e.num() == 0) return;
  auto [it, inserted] = exponents_.try_emplace(q, e);
  if (!inserted) {
    it->second += e;
    if (it->second.num() == 0) exponents_.erase(it);
  }
}

void PrimeLogSum::merge(const PrimeLogSum& other) {
  for (const auto& [q, e] : other.exponents_) add(q, e);
}

bool PrimeLogSum::has_nonnegative_integer_exponents() const {
  for (const auto& [q, e] : exponents_)
    if (!e.is_integer() || e.sign() < 0) return false;
  return true;
}

long double PrimeLogSum::value() const {
  long double v = 0;
  for (const auto& [q, e] : exponents_)
    v += static_cast<long double>(e.num()) / e.den() * std::log(static_cast<long double>(q));
  return v;
}

std::vector<LatticeTerm> enumerate_terms(const GZParams& params) {
  const auto& [p, d, D, mu, beta, g] = params;
  const i128 bound_sq = static_cast<i128>(g) * g * d * D;
  if (is_square(static_cast<int64_t>(static_cast<i128>(d) * D)))
    throw InternalError("d*D is a perfect square");
  // t^2 < g^2 d D  <=>  |t| <= floor(sqrt(g^2 d D)) since g^2 d D is not a square.
  const int64_t root = isqrt(static_cast<int64_t>(bound_sq));
  const i128 step = static_cast<i128>(2) * p * D;
  const Rational base_m(d, 4 * p);
  const i128 m_den = static_cast<i128>(4) * g * g * p * D;

  std::vector<LatticeTerm> terms;
  for (int sign : {1, -1}) {
    for (int64_t y = 0; y < D / g; ++y) {
      const i128 offset = static_cast<i128>(g) * mu * (sign * beta) - static_cast<i128>(2) * g * p * y;
      // |offset - step n| <= root
      const int64_t n_lo = ceil_div(offset - root, step);
      const int64_t n_hi = floor_div(offset + root, step);
      for (int64_t n = n_lo; n <= n_hi; ++n) {
        const i128 t = offset - step * n;
        LatticeTerm term{n, y, static_cast<int64_t>(t), {}, sign};
        if (t * t >= bound_sq) throw InternalError("enumeration bound violated at " + describe(term));
        term.m = base_m - Rational(static_cast<int64_t>(t * t), static_cast<int64_t>(m_den));
        if (term.m.sign() <= 0) throw InternalError("non-positive m at " + describe(term));
        if (!(term.m * Rational(D)).is_integer())
          throw IntegralityError("m*D is not integral at " + describe(term));
        terms.push_back(term);
      }
    }
  }
  return terms;
}

PrimeLogSum term_contribution(const LatticeTerm& term, const GZParams& params, RamifiedExponent variant) {
  const KappaContext ctx(params.D, params.p);
  const Rational& m = term.m;
  const auto diff = diff_set(m, ctx);
  PrimeLogSum out;
  if (diff.size() != 1) return out;

  const int64_t q = diff.front();
  const Rational mD = m * Rational(params.D);
  int64_t coefficient = 0;
  if (params.D % q != 0) {
    if (kronecker(-params.D, q) != -1)
      throw InternalError("Diff(m) contains the non-inert prime " + std::to_string(q) + " at " + describe(term));
    coefficient = (ord(m, q) + 1) * rho_checked(mD / Rational(q), params.D, "m*D/q");
  } else {
    const int exponent = variant == RamifiedExponent::of_mD ? ord(mD, q) : ord(m, q);
    coefficient = exponent * rho_checked(mD, params.D, "m*D");
  }
  const int64_t weight = int64_t{1} << (o_of_m(m, params.D) + 1);
  if (variant == RamifiedExponent::of_mD && coefficient < 0)
    throw InternalError("negative coefficient at " + describe(term));
  out.add(q, Rational(weight * coefficient));
  return out;
}

PrimeLogSum gz_log_norm(const GZParams& params, RamifiedExponent variant) {
  PrimeLogSum total;
  for (const auto& term : enumerate_terms(params)) total.merge(term_contribution(term, params, variant));
  return total;
}

NormMagnitude norm_magnitude(const PrimeLogSum& log_norm) {
  NormMagnitude out;
  std::ostringstream expr;
  bool first = true;
  for (const auto& [q, e] : log_norm.exponents()) {
    const Rational r = e / Rational(8);
    out.root_exponents.emplace(q, r);
    if (!first) expr << '*';
    first = false;
    expr << q;
    if (r.is_integer()) {
      if (r.num() != 1) expr << '^' << r.num();
      if (r.sign() > 0) {
        out.value *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(r.num()));
      } else {
        out.integral = false;
      }
    } else {
      expr << "^(" << r.num() << '/' << r.den() << ')';
      out.integral = false;
    }
  }
  out.expression = first ? "1" : expr.str();
  if (!out.integral) out.value = 0;
  return out;
}

}  // namespace cmforge
