#include "cmforge/hauptmodul.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "cmforge/arith.hpp"
#include "cmforge/errors.hpp"
#include "cmforge/gzrhs.hpp"

namespace cmforge {

namespace {

Real ten_pow(int e) { return pow(Real(10), e); }

// (-1)^k q^{k(3k-1)/2} over k in Z, plus the truncation estimate as log10 of
// the first omitted term magnitude.
struct Pentagonal {
  Complex sum;
  double log10_tail;
  int64_t terms;
};

Pentagonal pentagonal_series(const Complex& tau, const PrecisionConfig& prec) {
  const Real two_pi = 2 * pi();
  const double im = static_cast<double>(tau.im);
  // log10 |q|^e = -2 pi Im(tau) e / ln 10
  const double decay = 2.0 * M_PI * im / std::log(10.0);
  const double target = -static_cast<double>(prec.working_digits());

  Pentagonal out{Complex(Real(1)), 0.0, 1};
  for (int64_t k = 1;; ++k) {
    const int64_t e_minus = k * (3 * k - 1) / 2;
    const int64_t e_plus = k * (3 * k + 1) / 2;
    if (-decay * static_cast<double>(e_minus) < target) {
      out.log10_tail = -decay * static_cast<double>(e_minus);
      break;
    }
    if (out.terms + 2 > prec.max_terms) {
      std::ostringstream os;
      os << "eta series did not converge within " << prec.max_terms << " terms at Im(tau) = " << im;
      throw PrecisionError(os.str());
    }
    Complex term = exp(Complex(-two_pi * tau.im * e_minus, two_pi * tau.re * e_minus));
    term = term + exp(Complex(-two_pi * tau.im * e_plus, two_pi * tau.re * e_plus));
    if (k % 2 == 1)
      out.sum = out.sum - term;
    else
      out.sum = out.sum + term;
    out.terms += 2;
  }
  return out;
}

int eta_quotient_exponent(int64_t p) { return static_cast<int>(24 / (p - 1)); }

Complex series_sum(const QSeries& series, const Complex& tau, Real& error_bound, const PrecisionConfig& prec) {
  const Real two_pi = 2 * pi();
  const Complex q = exp(Complex(-two_pi * tau.im, two_pi * tau.re));
  const Real abs_q = abs(q);
  Complex power = Complex(Real(1)) / q;  // q^-1
  Complex sum;
  for (const auto& c : series.coefficients) {
    sum = sum + Real(c.str()) * power;
    power = power * q;
  }
  const auto& cs = series.coefficients;
  Real last = abs(Real(cs.back().str()));
  Real prev = cs.size() >= 2 ? abs(Real(cs[cs.size() - 2].str())) : Real(0);
  Real growth = (prev > 0 && last > prev) ? Real(last / prev) : Real(1);
  const Real ratio = growth * abs_q;
  if (ratio >= 1) {
    error_bound = Real(-1);
    throw PrecisionError("q-series tail does not converge at Im(tau) = " + tau.im.str(8), 1e300);
  }
  // |q|^(N-1) is the first omitted power; tail <= |c_last| * sum_k ratio^k * |q|^(N-2)
  const auto n = static_cast<long>(cs.size());
  error_bound = (last == 0 ? Real(1) : last) * pow(abs_q, n - 2) * ratio / (1 - ratio);
  const Real tolerance = ten_pow(-prec.decimal_digits) * (abs(sum) > 1 ? abs(sum) : Real(1));
  if (error_bound > tolerance)
    throw PrecisionError("q-series truncation bound " + error_bound.str(6) + " exceeds requested precision",
                         static_cast<double>(error_bound));
  return sum;
}

}  // namespace

ScopedPrecision::ScopedPrecision(const PrecisionConfig& prec) : ScopedPrecision(prec.working_digits()) {}

ScopedPrecision::ScopedPrecision(int digits10) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits10));
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(saved_); }

Complex operator/(const Complex& a, const Complex& b) {
  const Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Complex exp(const Complex& z) {
  const Real r = boost::multiprecision::exp(z.re);
  return {r * cos(z.im), r * sin(z.im)};
}

Complex sqrt(const Complex& z) {
  const Real r = abs(z);
  Real re = boost::multiprecision::sqrt((r + z.re) / 2);
  Real im = boost::multiprecision::sqrt((r - z.re) / 2);
  if (z.im < 0) im = -im;
  return {re, im};
}

Complex pow(const Complex& z, int n) {
  Complex result(Real(1));
  Complex base = n < 0 ? Complex(Real(1)) / z : z;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Real pi() { return 4 * atan(Real(1)); }

Complex to_complex(const HeegnerPoint& pt) {
  const Real two_a = Real(2 * pt.a);
  return {Real(-pt.b) / two_a, boost::multiprecision::sqrt(Real(-pt.disc)) / two_a};
}

Complex eta(const Complex& tau, const PrecisionConfig& prec) {
  if (tau.im <= 0) throw InvalidArgument("eta requires Im(tau) > 0");
  ScopedPrecision guard(prec);
  const Pentagonal series = pentagonal_series(tau, prec);
  // q^(1/24) = exp(pi i tau / 12)
  const Real pi_over_12 = pi() / 12;
  const Complex prefactor = exp(Complex(-pi_over_12 * tau.im, pi_over_12 * tau.re));
  return prefactor * series.sum;
}

bool has_eta_quotient(int64_t p) { return p == 2 || p == 3 || p == 5 || p == 7 || p == 13; }

int64_t fricke_constant(int64_t p) {
  switch (p) {
    case 2: return 4096;
    case 3: return 729;
    case 5: return 125;
    case 7: return 49;
    case 13: return 13;
    default: throw UnsupportedError("no eta-quotient Hauptmodul for p = " + std::to_string(p));
  }
}

Complex eta_quotient_hauptmodul(int64_t p, const Complex& tau, const PrecisionConfig& prec) {
  if (!has_eta_quotient(p)) throw UnsupportedError("no eta-quotient Hauptmodul for p = " + std::to_string(p));
  if (tau.im <= 0) throw InvalidArgument("Hauptmodul requires Im(tau) > 0");
  ScopedPrecision guard(prec);
  const Complex ratio = eta(tau, prec) / eta(Real(p) * tau, prec);
  const Complex t = pow(ratio, eta_quotient_exponent(p));
  return t + Complex(Real(fricke_constant(p))) / t;
}

Complex reduce_fricke(const Complex& tau, int64_t p) {
  Complex z = tau;
  for (int iter = 0; iter < 10'000; ++iter) {
    z.re -= boost::multiprecision::round(z.re);
    const Real norm = z.re * z.re + z.im * z.im;
    if (norm * p >= 1) break;
    // Im(-1/(p z)) = Im(z) / (p |z|^2) > Im(z)
    z = Complex(Real(-1)) / (Real(p) * z);
  }
  return z;
}

HauptmodulEvaluation hauptmodul_evaluate(int64_t p, const Complex& tau, const PrecisionConfig& prec,
                                         const QSeries* series) {
  if (tau.im <= 0) throw InvalidArgument("Hauptmodul requires Im(tau) > 0");
  ScopedPrecision guard(prec);
  const Complex z = reduce_fricke(tau, p);
  HauptmodulEvaluation out;
  if (series != nullptr) {
    if (series->p != p)
      throw InvalidArgument("series is for p = " + std::to_string(series->p) + ", requested " + std::to_string(p));
    out.value = series_sum(*series, z, out.error_bound, prec);
    return out;
  }
  if (!has_eta_quotient(p))
    throw UnsupportedError("series data required for p = " + std::to_string(p));
  out.value = eta_quotient_hauptmodul(p, z, prec);
  // eta is summed to 10^-working relative; the quotient and its power lose
  // at most a small constant factor of that.
  const Real scale = abs(out.value) > 1 ? abs(out.value) : Real(1);
  out.error_bound = scale * ten_pow(-prec.working_digits() + 3);
  return out;
}

Complex hauptmodul_value(int64_t p, const Complex& tau, const PrecisionConfig& prec, const QSeries* series) {
  return hauptmodul_evaluate(p, tau, prec, series).value;
}

QSeries parse_qseries(std::istream& in) {
  QSeries out;
  out.source = QSeries::Source::data_file;
  int64_t count = -1;
  bool have_p = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "p" || tok == "count") {
      int64_t v;
      if (!(ls >> v)) throw InvalidArgument("qseries line " + std::to_string(line_no) + ": missing value");
      if (tok == "p") {
        out.p = v;
        have_p = true;
      } else {
        count = v;
      }
      continue;
    }
    if (!have_p || count < 0)
      throw InvalidArgument("qseries: header fields p and count must precede coefficients");
    try {
      out.coefficients.emplace_back(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("qseries line " + std::to_string(line_no) + ": not an integer: " + tok);
    }
  }
  if (!have_p || !is_prime(out.p)) throw InvalidArgument("qseries: missing or non-prime p");
  if (count < 1 || static_cast<int64_t>(out.coefficients.size()) != count)
    throw InvalidArgument("qseries: count " + std::to_string(count) + " does not match " +
                          std::to_string(out.coefficients.size()) + " coefficients");
  if (out.coefficients.front() != 1) throw InvalidArgument("qseries: leading coefficient c(-1) must be 1");
  return out;
}

QSeries load_qseries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open series file " + path);
  return parse_qseries(in);
}

LhsResult lhs_log_norm(int64_t p, int64_t d, int64_t beta, int64_t D, int64_t mu, const PrecisionConfig& prec,
                       const QSeries* series) {
  const GZParams params = GZParams::make(p, d, beta, D, mu);
  if (series == nullptr && !has_eta_quotient(p))
    throw UnsupportedError("series data required for p = " + std::to_string(p));
  ScopedPrecision guard(prec);

  auto values = [&](int64_t disc, int64_t residue, Real& err) {
    std::vector<Complex> out;
    for (const auto& f : heegner_reps(-disc, p, residue)) {
      const auto ev = hauptmodul_evaluate(p, to_complex(heegner_point(f)), prec, series);
      out.push_back(ev.value);
      if (ev.error_bound > err) err = ev.error_bound;
    }
    return out;
  };
  Real err_D(0), err_d(0);
  const auto big = values(params.D, params.mu, err_D);
  const auto small = values(params.d, params.beta, err_d);

  const Real floor_gap = ten_pow(-prec.decimal_digits / 2);
  Real total(0);
  Real err_total(0);
  for (const auto& x : big) {
    for (const auto& y : small) {
      const Real gap = abs(x - y);
      if (gap < floor_gap)
        throw IllConditionedError("Heegner values coincide to working precision (|difference| = " + gap.str(6) + ")");
      total += log(gap);
      err_total += (err_D + err_d) / gap;
    }
  }
  return LhsResult{8 * total, static_cast<double>(8 * err_total)};
}

}  // namespace cmforge
