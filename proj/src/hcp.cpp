#include "cmforge/hcp.hpp"

#include <algorithm>
#include <complex>
#include <optional>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmforge/arith.hpp"
#include "cmforge/errors.hpp"
#include "cmforge/quadforms.hpp"

namespace cmforge {

namespace {

using BigRational = boost::multiprecision::cpp_rational;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr int64_t kClassNumberOne[] = {3, 4, 7, 8, 11, 19, 43, 67, 163};
constexpr int64_t kGenusZeroFricke[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71};

int64_t smallest_residue(int64_t x, int64_t p) {
  const auto r = admissible_residues(-x, p);
  if (r.empty())
    throw InvalidArgument("-" + std::to_string(x) + " is not a square mod " + std::to_string(4 * p));
  return r.front();
}

BigInt signed_value(const BigInt& mag, Sign s) {
  if (s == Sign::unresolved && mag != 0) throw InternalError("sign is unresolved");
  return s == Sign::minus ? BigInt(-mag) : mag;
}

BigInt norm_of(const GZParams& params, RamifiedExponent variant) {
  const NormMagnitude n = norm_magnitude(gz_log_norm(params, variant));
  if (!n.integral)
    throw InternalError("norm for p=" + std::to_string(params.p) + ", d=" + std::to_string(params.d) +
                        ", D=" + std::to_string(params.D) + " is not an integer: " + n.expression);
  return n.value;
}

// Interpolant through all pairs, with coefficients as exact rationals.
std::vector<BigRational> lagrange(const std::vector<std::pair<BigInt, BigInt>>& pts) {
  const std::size_t n = pts.size();
  std::vector<BigRational> coeffs(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // basis *= (X - x_j)
      std::vector<BigRational> next(basis.size() + 1, BigRational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * BigRational(pts[j].first);
      }
      basis = std::move(next);
      denom *= BigRational(pts[i].first - pts[j].first);
    }
    const BigRational scale = BigRational(pts[i].second) / denom;
    for (std::size_t k = 0; k < n; ++k) coeffs[k] += basis[k] * scale;
  }
  return coeffs;
}

// Monic integral interpolant of degree pts.size()-1, or nothing.
std::optional<std::vector<BigInt>> integral_monic_interpolant(const std::vector<std::pair<BigInt, BigInt>>& pts) {
  const auto coeffs = lagrange(pts);
  if (coeffs.back() != 1) return std::nullopt;
  std::vector<BigInt> out;
  for (const auto& c : coeffs) {
    if (denominator(c) != 1) return std::nullopt;
    out.push_back(numerator(c));
  }
  return out;
}

BigInt horner(const std::vector<BigInt>& coeffs, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool has_distinct_x(const std::vector<std::pair<BigInt, BigInt>>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i].first == pts[j].first) return false;
  return true;
}

std::vector<std::pair<BigInt, BigInt>> signed_points(const std::vector<InterpolationPair>& pairs) {
  std::vector<std::pair<BigInt, BigInt>> pts;
  for (const auto& pr : pairs) pts.emplace_back(pr.x(), pr.y());
  return pts;
}

std::string describe_poly(const std::vector<BigInt>& coeffs) {
  ClassPolynomial tmp;
  tmp.coefficients = coeffs;
  return tmp.to_string();
}

std::vector<InterpolationPair> search_signs(const std::vector<InterpolationPair>& pairs, int64_t degree) {
  // Slots that carry a free sign: (pair index, is_x).
  std::vector<std::pair<std::size_t, bool>> slots;
  std::size_t pinned = pairs.size();
  for (std::size_t i = pairs.size(); i-- > 0;) {
    if (pairs[i].x_mag != 0) {
      pinned = i;
      break;
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].x_mag != 0 && i != pinned) slots.emplace_back(i, true);
    if (pairs[i].y_mag != 0) slots.emplace_back(i, false);
  }
  if (slots.size() > 24) throw UnsupportedError("sign search space too large");

  const std::size_t used = static_cast<std::size_t>(degree) + 1;
  std::vector<std::vector<BigInt>> found;
  std::vector<InterpolationPair> first_match;
  for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); ++mask) {
    std::vector<InterpolationPair> trial = pairs;
    for (auto& pr : trial) pr.x_sign = pr.y_sign = Sign::plus;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!((mask >> s) & 1u)) continue;
      auto& pr = trial[slots[s].first];
      (slots[s].second ? pr.x_sign : pr.y_sign) = Sign::minus;
    }
    const auto pts = signed_points(trial);
    const std::vector<std::pair<BigInt, BigInt>> head(pts.begin(), pts.begin() + static_cast<long>(used));
    if (!has_distinct_x(pts)) continue;
    const auto poly = integral_monic_interpolant(head);
    if (!poly) continue;
    bool consistent = true;
    for (std::size_t k = used; k < pts.size() && consistent; ++k)
      consistent = horner(*poly, pts[k].first) == pts[k].second;
    if (!consistent) continue;
    if (std::find(found.begin(), found.end(), *poly) == found.end()) {
      if (found.empty()) first_match = trial;
      found.push_back(*poly);
    }
  }
  if (found.empty()) throw SignResolutionError("no sign assignment yields a monic integral interpolant");
  if (found.size() > 1) {
    std::ostringstream os;
    os << "sign search is ambiguous; candidates:";
    for (const auto& c : found) os << " [" << describe_poly(c) << ']';
    throw AmbiguityError(os.str());
  }
  for (auto& pr : first_match) {
    if (pr.x_mag == 0) pr.x_sign = Sign::plus;
    if (pr.y_mag == 0) pr.y_sign = Sign::plus;
  }
  return first_match;
}

Sign sign_of(const Real& v) { return v < 0 ? Sign::minus : Sign::plus; }

std::vector<InterpolationPair> numeric_signs(const std::vector<InterpolationPair>& pairs, const SignContext& ctx) {
  if (ctx.series == nullptr && !has_eta_quotient(ctx.p))
    throw UnsupportedError("numeric sign resolution requires series data for p = " + std::to_string(ctx.p));
  ScopedPrecision guard(ctx.precision);
  auto value_at = [&](const QuadraticForm& f) {
    return hauptmodul_value(ctx.p, to_complex(heegner_point(f)), ctx.precision, ctx.series);
  };
  auto single = [&](int64_t D) { return value_at(heegner_reps(-D, ctx.p, smallest_residue(D, ctx.p)).front()); };

  const Complex base = single(ctx.base_D);
  std::vector<Complex> roots;
  for (const auto& f : heegner_reps(-ctx.d, ctx.p, ctx.beta)) roots.push_back(value_at(f));

  const Real tiny = pow(Real(10), -ctx.precision.decimal_digits / 2);
  auto check_real = [&](const Complex& z, const BigInt& mag, const char* what, int64_t D) {
    const Real scale = abs(z) > 1 ? abs(z) : Real(1);
    if (abs(z.im) > tiny * scale)
      throw InternalError(std::string(what) + " for D=" + std::to_string(D) + " is not real");
    const Real exact(mag.str());
    if (abs(abs(z.re) - exact) > pow(Real(10), -20) * scale)
      throw InternalError(std::string(what) + " for D=" + std::to_string(D) +
                          " disagrees with the exact magnitude " + mag.str());
  };

  std::vector<InterpolationPair> out = pairs;
  for (auto& pr : out) {
    const Complex x = single(pr.D) - base;
    Complex y(Real(1));
    for (const auto& r : roots) y = y * (x + base - r);
    check_real(x, pr.x_mag, "X", pr.D);
    check_real(y, pr.y_mag, "Y", pr.D);
    pr.x_sign = pr.x_mag == 0 ? Sign::plus : sign_of(x.re);
    pr.y_sign = pr.y_mag == 0 ? Sign::plus : sign_of(y.re);
  }
  return out;
}

std::vector<std::complex<long double>> polynomial_roots(const std::vector<BigInt>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<std::complex<long double>> c;
  for (const auto& v : coeffs) c.emplace_back(static_cast<long double>(v), 0.0L);
  std::vector<std::complex<long double>> z(n);
  const std::complex<long double> seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
  auto eval = [&](std::complex<long double> x) {
    std::complex<long double> acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * x + c[k];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<long double> den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const auto step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-16L) break;
  }
  return z;
}

// Exact division test: does `factor` (monic) divide `poly`?
bool divides(const std::vector<BigInt>& factor, std::vector<BigInt> poly) {
  const std::size_t m = factor.size() - 1;
  for (std::size_t k = poly.size() - 1; k >= m; --k) {
    const BigInt lead = poly[k];
    for (std::size_t j = 0; j <= m; ++j) poly[k - m + j] -= lead * factor[j];
    if (k == m) break;
  }
  return std::all_of(poly.begin(), poly.end(), [](const BigInt& v) { return v == 0; });
}

}  // namespace

BigInt InterpolationPair::x() const { return signed_value(x_mag, x_sign); }
BigInt InterpolationPair::y() const { return signed_value(y_mag, y_sign); }

BigInt ClassPolynomial::evaluate(const BigInt& x) const { return horner(coefficients, x); }

std::string ClassPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coefficients[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'X';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

bool is_genus_zero_fricke_prime(int64_t p) {
  return std::find(std::begin(kGenusZeroFricke), std::end(kGenusZeroFricke), p) != std::end(kGenusZeroFricke);
}

std::vector<int64_t> s_set(int64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (!is_genus_zero_fricke_prime(p))
    throw UnsupportedError("Gamma_0*(" + std::to_string(p) + ") is not of genus zero");
  std::vector<int64_t> out;
  for (int64_t D : kClassNumberOne)
    if (!admissible_residues(-D, p).empty()) out.push_back(-D);
  return out;
}

std::vector<int64_t> usable_s_set(int64_t p) {
  std::vector<int64_t> out;
  for (int64_t disc : s_set(p))
    if (-disc > 4) out.push_back(-disc);
  return out;
}

bool feasible(int64_t d, int64_t p) {
  const auto usable = usable_s_set(p);
  if (d <= 0 || !is_fundamental_discriminant(-d))
    throw InvalidArgument("-" + std::to_string(d) + " is not a negative fundamental discriminant");
  if (admissible_residues(-d, p).empty())
    throw InvalidArgument("-" + std::to_string(d) + " is not a square mod " + std::to_string(4 * p));
  return class_number(-d) + 1 <= static_cast<int64_t>(usable.size());
}

std::vector<InterpolationPair> build_pairs(int64_t d, int64_t beta, int64_t p, int64_t base_D,
                                           RamifiedExponent variant) {
  const auto usable = usable_s_set(p);
  if (std::find(usable.begin(), usable.end(), base_D) == usable.end())
    throw InvalidArgument("base discriminant -" + std::to_string(base_D) + " is not in the usable S(" +
                          std::to_string(p) + ")");
  if (!feasible(d, p)) throw InfeasibleError("h(-d) + 1 exceeds |S(p)|");
  const int64_t base_mu = smallest_residue(base_D, p);

  std::vector<InterpolationPair> out;
  for (int64_t D : usable) {
    const int64_t mu = smallest_residue(D, p);
    InterpolationPair pr;
    pr.D = D;
    pr.x_mag = D == base_D ? BigInt(0) : norm_of(GZParams::make(p, base_D, base_mu, D, mu), variant);
    pr.y_mag = D == d ? BigInt(0) : norm_of(GZParams::make(p, d, beta, D, mu), variant);
    out.push_back(pr);
  }
  return out;
}

const char* to_string(SignStrategy s) { return s == SignStrategy::numeric ? "numeric" : "search"; }

SignStrategy parse_sign_strategy(const std::string& s) {
  if (s == "search") return SignStrategy::search;
  if (s == "numeric") return SignStrategy::numeric;
  throw InvalidArgument("sign strategy must be search or numeric, got '" + s + "'");
}

std::vector<InterpolationPair> resolve_signs(const std::vector<InterpolationPair>& pairs, SignStrategy strategy,
                                             const SignContext& ctx) {
  const int64_t h = class_number(-ctx.d);
  if (static_cast<int64_t>(pairs.size()) < h + 1)
    throw InfeasibleError("need " + std::to_string(h + 1) + " pairs, have " + std::to_string(pairs.size()));
  if (strategy == SignStrategy::numeric) return numeric_signs(pairs, ctx);
  return search_signs(pairs, h);
}

ClassPolynomial interpolate(const std::vector<InterpolationPair>& pairs, int64_t d) {
  if (pairs.empty()) throw DegenerateDataError("no interpolation pairs");
  const auto pts = signed_points(pairs);
  if (!has_distinct_x(pts)) throw DegenerateDataError("interpolation pairs have duplicate X values");
  const auto coeffs = lagrange(pts);
  ClassPolynomial poly;
  poly.d = d;
  for (const auto& c : coeffs) {
    if (denominator(c) != 1)
      throw SignResolutionError("interpolant has non-integral coefficient " + c.str());
    poly.coefficients.push_back(numerator(c));
  }
  while (poly.coefficients.size() > 1 && poly.coefficients.back() == 0) poly.coefficients.pop_back();
  if (poly.coefficients.back() != 1 || poly.degree() != static_cast<int>(pairs.size()) - 1)
    throw SignResolutionError("interpolant " + poly.to_string() + " is not monic of degree " +
                              std::to_string(pairs.size() - 1));
  for (const auto& [x, y] : pts)
    if (poly.evaluate(x) != y) throw InternalError("interpolant does not reproduce its data");
  return poly;
}

bool is_irreducible(const ClassPolynomial& poly) {
  const int n = poly.degree();
  if (n <= 1) return n == 1;
  if (n > 16) throw UnsupportedError("irreducibility check limited to degree 16");
  const auto roots = polynomial_roots(poly.coefficients);
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k > n / 2) continue;
    std::vector<std::complex<long double>> f{1.0L};
    for (int i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      std::vector<std::complex<long double>> next(f.size() + 1, 0.0L);
      for (std::size_t j = 0; j < f.size(); ++j) {
        next[j + 1] += f[j];
        next[j] -= f[j] * roots[static_cast<std::size_t>(i)];
      }
      f = std::move(next);
    }
    std::vector<BigInt> candidate;
    bool near_integral = true;
    for (const auto& c : f) {
      const long double r = std::round(c.real());
      if (std::abs(c.real() - r) > 1e-6L * std::max(1.0L, std::abs(r)) || std::abs(c.imag()) > 1e-6L) {
        near_integral = false;
        break;
      }
      candidate.emplace_back(static_cast<long long>(r));
    }
    if (near_integral && divides(candidate, poly.coefficients)) return false;
  }
  return true;
}

ClassPolyResult compute_class_polynomial(int64_t p, int64_t d, const ClassPolyOptions& opts) {
  ClassPolyResult out;
  out.p = p;
  out.d = d;
  out.s_set = s_set(p);
  const auto usable = usable_s_set(p);
  if (d <= 4) throw InvalidArgument("d must exceed 4, got " + std::to_string(d));
  out.beta = opts.beta >= 0 ? mod(opts.beta, 2 * p) : smallest_residue(d, p);
  if (mod(out.beta * out.beta + d, 4 * p) != 0)
    throw InvalidArgument("beta = " + std::to_string(opts.beta) + " is not admissible for d = " + std::to_string(d));
  out.class_number = class_number(-d);
  if (!feasible(d, p)) {
    std::ostringstream os;
    os << "infeasible: h(-" << d << ") + 1 = " << out.class_number + 1 << " > |S(" << p << ")| = " << usable.size();
    throw InfeasibleError(os.str());
  }
  out.base_D = opts.base_D != 0 ? opts.base_D : usable.front();

  const auto pairs = build_pairs(d, out.beta, p, out.base_D, opts.variant);
  SignContext ctx{p, d, out.beta, out.base_D, opts.precision, opts.series};
  out.pairs = resolve_signs(pairs, opts.strategy, ctx);

  const std::vector<InterpolationPair> head(out.pairs.begin(), out.pairs.begin() + out.class_number + 1);
  out.polynomial = interpolate(head, d);
  for (const auto& pr : out.pairs)
    if (out.polynomial.evaluate(pr.x()) != pr.y())
      throw SignResolutionError("pair D=" + std::to_string(pr.D) + " is inconsistent with " +
                                out.polynomial.to_string());
  return out;
}

}  // namespace cmforge
