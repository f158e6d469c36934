#include "cmforge/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmforge/arith.hpp"
#include "cmforge/cmvalue.hpp"
#include "cmforge/errors.hpp"
#include "cmforge/gzrhs.hpp"
#include "cmforge/hauptmodul.hpp"
#include "cmforge/hcp.hpp"
#include "cmforge/quadforms.hpp"

namespace cmforge::cli {

namespace {

using json = nlohmann::json;

constexpr double kCrosscheckTolerance = 1e-8;

enum class Format { text, json, csv };

struct RunConfig {
  PrecisionConfig precision;
  RamifiedExponent ramified_exponent = RamifiedExponent::of_mD;
  int64_t base_discriminant = 0;
  Format output_format = Format::text;
  std::string series_path;
  SignStrategy strategy = SignStrategy::search;
};

struct Report {
  std::string command;
  json params = json::object();
  json result = json::object();
  json warnings = json::array();
  std::vector<std::string> text;                   // text-format lines
  std::vector<std::vector<std::string>> csv_rows;  // p,d,beta,D,mu,prime,exponent
};

// Integers beyond 2^53 do not survive a double round trip in JSON readers.
json exact(const BigInt& v) {
  static const BigInt kLimit = BigInt(1) << 53;
  if (v < kLimit && v > -kLimit) return json(static_cast<int64_t>(v));
  return json(v.str());
}

json log_sum_json(const PrimeLogSum& s) {
  json out = json::object();
  for (const auto& [q, e] : s.exponents()) out[std::to_string(q)] = e.to_string();
  return out;
}

std::string log_sum_text(const PrimeLogSum& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, e] : s.exponents()) {
    os << (first ? "" : " + ") << e << "*log(" << q << ')';
    first = false;
  }
  return os.str();
}

std::string sign_char(Sign s) { return s == Sign::minus ? "-" : s == Sign::plus ? "+" : "?"; }

void emit(const Report& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::json: {
      json doc = {{"command", r.command}, {"params", r.params}, {"result", r.result}, {"warnings", r.warnings}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "p,d,beta,D,mu,prime,exponent\n";
      for (const auto& row : r.csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
      }
      break;
    case Format::text:
      for (const auto& line : r.text) out << line << '\n';
      for (const auto& w : r.warnings) out << "warning: " << w.get<std::string>() << '\n';
      break;
  }
}

std::optional<int64_t> opt(int64_t v) { return v < 0 ? std::nullopt : std::optional<int64_t>(v); }

GZParams make_params(int64_t p, int64_t d, std::optional<int64_t> beta, int64_t D, std::optional<int64_t> mu) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (d == D) throw InvalidArgument("d and D must be distinct");
  GZParams base = GZParams::with_default_residues(p, d, D);
  return GZParams::make(p, d, beta.value_or(base.beta), D, mu.value_or(base.mu));
}

json params_json(const GZParams& gp) {
  return {{"p", gp.p}, {"d", gp.d}, {"beta", gp.beta}, {"D", gp.D}, {"mu", gp.mu}, {"g", gp.g}};
}

Report cmd_gznorm(const GZParams& gp, const RunConfig& cfg, bool breakdown) {
  Report r;
  r.command = "gznorm";
  r.params = params_json(gp);
  r.params["ramified_exponent"] = to_string(cfg.ramified_exponent);

  const auto terms = enumerate_terms(gp);
  PrimeLogSum total;
  json rows = json::array();
  std::vector<std::string> row_text;
  const KappaContext ctx(gp.D, gp.p);
  for (const auto& t : terms) {
    const auto c = term_contribution(t, gp, cfg.ramified_exponent);
    total.merge(c);
    if (breakdown) {
      const auto diff = diff_set(t.m, ctx);
      rows.push_back({{"sign", t.sign > 0 ? "+" : "-"},
                      {"y", t.y},
                      {"n", t.n},
                      {"m", t.m.to_string()},
                      {"diff", diff},
                      {"contribution", log_sum_json(c)}});
      std::ostringstream os;
      os << "  " << (t.sign > 0 ? '+' : '-') << " y=" << t.y << " n=" << t.n << " m=" << t.m << " Diff={";
      for (std::size_t i = 0; i < diff.size(); ++i) os << (i ? "," : "") << diff[i];
      os << "} contribution=" << log_sum_text(c);
      row_text.push_back(os.str());
    }
  }
  if (!total.has_nonnegative_integer_exponents())
    r.warnings.push_back("exponents are not all nonnegative integers");
  const auto mag = norm_magnitude(total);

  r.result = {{"log_norm", log_sum_json(total)},
              {"value", static_cast<double>(total.value())},
              {"norm", mag.integral ? exact(mag.value) : json(mag.expression)},
              {"norm_integral", mag.integral},
              {"norm_expression", mag.expression},
              {"term_count", terms.size()}};
  if (breakdown) r.result["terms"] = rows;

  std::ostringstream hdr;
  hdr << "p=" << gp.p << " d=" << gp.d << " beta=" << gp.beta << " D=" << gp.D << " mu=" << gp.mu;
  r.text.push_back(hdr.str());
  r.text.push_back("log norm^8 = " + log_sum_text(total));
  r.text.push_back("value = " + std::to_string(static_cast<double>(total.value())));
  r.text.push_back("norm = " + (mag.integral ? mag.value.str() : mag.expression));
  for (auto& line : row_text) r.text.push_back(line);

  for (const auto& [q, e] : total.exponents())
    r.csv_rows.push_back({std::to_string(gp.p), std::to_string(gp.d), std::to_string(gp.beta), std::to_string(gp.D),
                          std::to_string(gp.mu), std::to_string(q), e.to_string()});
  return r;
}

struct CrossOutcome {
  GZParams params;
  double lhs = 0;
  double lhs_error = 0;
  double rhs = 0;
  double rhs_other = 0;
  double rel = 0;
  double rel_other = 0;
  bool variants_differ = false;
  bool pass = false;
  bool pass_other = false;
};

Real log_value(const PrimeLogSum& sum) {
  Real v(0);
  for (const auto& [q, e] : sum.exponents()) v += Real(e.num()) / e.den() * log(Real(q));
  return v;
}

CrossOutcome crosscheck_one(const GZParams& gp, const RunConfig& cfg, const QSeries* series) {
  CrossOutcome o{gp};
  const RamifiedExponent other =
      cfg.ramified_exponent == RamifiedExponent::of_mD ? RamifiedExponent::of_m : RamifiedExponent::of_mD;
  ScopedPrecision guard(cfg.precision);
  const auto lhs = lhs_log_norm(gp.p, gp.d, gp.beta, gp.D, gp.mu, cfg.precision, series);
  const auto main_sum = gz_log_norm(gp, cfg.ramified_exponent);
  const auto other_sum = gz_log_norm(gp, other);
  const Real rhs = log_value(main_sum);
  const Real rhs_other = log_value(other_sum);
  const Real scale = abs(lhs.value) > 1 ? Real(abs(lhs.value)) : Real(1);
  o.lhs = static_cast<double>(lhs.value);
  o.lhs_error = lhs.error_estimate;
  o.rhs = static_cast<double>(rhs);
  o.rhs_other = static_cast<double>(rhs_other);
  o.variants_differ = !(main_sum == other_sum);
  o.rel = static_cast<double>(Real(abs(rhs - lhs.value) / scale));
  o.rel_other = static_cast<double>(Real(abs(rhs_other - lhs.value) / scale));
  o.pass = o.rel < kCrosscheckTolerance;
  o.pass_other = o.rel_other < kCrosscheckTolerance;
  return o;
}

json outcome_json(const CrossOutcome& o, const RunConfig& cfg) {
  json j = params_json(o.params);
  j["rhs"] = o.rhs;
  j["lhs"] = o.lhs;
  j["lhs_error_estimate"] = o.lhs_error;
  j["abs_discrepancy"] = std::abs(o.rhs - o.lhs);
  j["rel_discrepancy"] = o.rel;
  j["status"] = o.pass ? "PASS" : "FAIL";
  j["variant"] = to_string(cfg.ramified_exponent);
  j["variants_differ"] = o.variants_differ;
  if (o.variants_differ) {
    const RamifiedExponent other =
        cfg.ramified_exponent == RamifiedExponent::of_mD ? RamifiedExponent::of_m : RamifiedExponent::of_mD;
    j["other_variant"] = {{"variant", to_string(other)},
                          {"rhs", o.rhs_other},
                          {"rel_discrepancy", o.rel_other},
                          {"status", o.pass_other ? "PASS" : "FAIL"}};
  }
  return j;
}

std::string outcome_text(const CrossOutcome& o, const RunConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "p=" << o.params.p << " d=" << o.params.d << " D=" << o.params.D << " beta=" << o.params.beta
     << " mu=" << o.params.mu << " RHS=" << o.rhs << " LHS=" << o.lhs << " rel=" << o.rel << " [" << to_string(cfg.ramified_exponent) << "] " << (o.pass ? "PASS" : "FAIL");
  if (o.variants_differ)
    os << "; " << (cfg.ramified_exponent == RamifiedExponent::of_mD ? "of_m" : "of_mD") << " rel=" << o.rel_other
       << ' ' << (o.pass_other ? "PASS" : "FAIL");
  return os.str();
}

void require_series_or_eta(int64_t p, const QSeries* series) {
  if (series == nullptr && !has_eta_quotient(p))
    throw UnsupportedError("series data required for p = " + std::to_string(p) + " (use --series)");
}

Report cmd_crosscheck(const GZParams& gp, const RunConfig& cfg, const QSeries* series, bool& pass) {
  require_series_or_eta(gp.p, series);
  const auto o = crosscheck_one(gp, cfg, series);
  Report r;
  r.command = "crosscheck";
  r.params = params_json(gp);
  r.params["decimal_digits"] = cfg.precision.decimal_digits;
  r.result = outcome_json(o, cfg);
  r.text.push_back(outcome_text(o, cfg));
  pass = o.pass;
  return r;
}

std::vector<int64_t> admissible_discriminants(int64_t p, int64_t max_abs) {
  std::vector<int64_t> out;
  for (int64_t x = 5; x <= max_abs; ++x)
    if (is_fundamental_discriminant(-x) && !admissible_residues(-x, p).empty()) out.push_back(x);
  return out;
}

Report cmd_crossgrid(int64_t p, int64_t max_abs, int count, int threads, const RunConfig& cfg, const QSeries* series,
                     bool& pass) {
  require_series_or_eta(p, series);
  const auto discs = admissible_discriminants(p, max_abs);
  std::vector<std::pair<int64_t, int64_t>> pairs;
  for (std::size_t k = 0; static_cast<int>(pairs.size()) < count && k < discs.size() / 2; ++k)
    pairs.emplace_back(discs[k], discs[discs.size() - 1 - k]);

  std::vector<std::optional<CrossOutcome>> results(pairs.size());
  std::vector<std::string> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        results[i] = crosscheck_one(GZParams::with_default_residues(p, pairs[i].first, pairs[i].second), cfg, series);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Report r;
  r.command = "crossgrid";
  r.params = {{"p", p}, {"max", max_abs}, {"pairs", count}, {"decimal_digits", cfg.precision.decimal_digits}};
  json rows = json::array();
  pass = !pairs.empty();
  // pairs are generated with d ascending, so output is already (d, D)-sorted
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!results[i]) {
      rows.push_back({{"d", pairs[i].first}, {"D", pairs[i].second}, {"status", "ERROR"}, {"error", errors[i]}});
      r.text.push_back("d=" + std::to_string(pairs[i].first) + " D=" + std::to_string(pairs[i].second) +
                       " ERROR " + errors[i]);
      pass = false;
      continue;
    }
    rows.push_back(outcome_json(*results[i], cfg));
    r.text.push_back(outcome_text(*results[i], cfg));
    pass = pass && results[i]->pass;
  }
  r.result = {{"checks", rows}, {"status", pass ? "PASS" : "FAIL"}};
  r.text.push_back(pass ? "PASS" : "FAIL");
  return r;
}

json pair_json(const InterpolationPair& pr) {
  return {{"D", pr.D},
          {"x_mag", exact(pr.x_mag)},
          {"y_mag", exact(pr.y_mag)},
          {"x_sign", sign_char(pr.x_sign)},
          {"y_sign", sign_char(pr.y_sign)},
          {"x", exact(pr.x())},
          {"y", exact(pr.y())}};
}

Report cmd_classpoly(int64_t p, int64_t d, std::optional<int64_t> beta, const RunConfig& cfg, const QSeries* series) {
  ClassPolyOptions opts;
  opts.base_D = cfg.base_discriminant;
  opts.beta = beta.value_or(-1);
  opts.strategy = cfg.strategy;
  opts.variant = cfg.ramified_exponent;
  opts.precision = cfg.precision;
  opts.series = series;
  const auto res = compute_class_polynomial(p, d, opts);

  Report r;
  r.command = "classpoly";
  r.params = {{"p", p}, {"d", d}, {"beta", res.beta}, {"base_D", res.base_D}, {"strategy", to_string(cfg.strategy)}};
  json coeffs = json::array();
  for (const auto& c : res.polynomial.coefficients) coeffs.push_back(exact(c));
  json pairs = json::array();
  for (const auto& pr : res.pairs) pairs.push_back(pair_json(pr));
  r.result = {{"polynomial", res.polynomial.to_string()},
              {"coefficients", coeffs},
              {"degree", res.polynomial.degree()},
              {"class_number", res.class_number},
              {"s_set", res.s_set},
              {"pairs", pairs},
              {"irreducible", is_irreducible(res.polynomial)}};

  std::ostringstream s;
  s << "S(" << p << ") = {";
  for (std::size_t i = 0; i < res.s_set.size(); ++i) s << (i ? ", " : "") << res.s_set[i];
  s << "}";
  r.text.push_back(s.str());
  r.text.push_back("h(-" + std::to_string(d) + ") = " + std::to_string(res.class_number) + ", base D = " +
                   std::to_string(res.base_D));
  for (const auto& pr : res.pairs)
    r.text.push_back("  D=" + std::to_string(pr.D) + "  (X, Y) = (" + pr.x().str() + ", " + pr.y().str() + ")");
  r.text.push_back("Y = " + res.polynomial.to_string());
  return r;
}

Report cmd_heegner(int64_t d, int64_t p, std::optional<int64_t> beta) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  const auto residues = admissible_residues(-d, p);
  if (residues.empty())
    throw InvalidArgument("-" + std::to_string(d) + " is not a square mod " + std::to_string(4 * p));
  const int64_t b = beta.value_or(residues.front());
  const auto forms = heegner_reps(-d, p, b);
  Report r;
  r.command = "heegner";
  r.params = {{"d", d}, {"p", p}, {"beta", mod(b, 2 * p)}};
  json rows = json::array();
  for (const auto& f : forms) {
    const auto pt = heegner_point(f);
    std::ostringstream tau;
    tau << "(" << -pt.b << "+sqrt(" << pt.disc << "))/" << 2 * pt.a;
    rows.push_back({{"a", f.a}, {"b", f.b}, {"c", f.c}, {"tau", tau.str()}, {"reduced", {reduce(f).a, reduce(f).b, reduce(f).c}}});
    std::ostringstream os;
    os << f << "  tau = " << tau.str();
    r.text.push_back(os.str());
  }
  r.result = {{"forms", rows}, {"class_number", forms.size()}};
  return r;
}

Report cmd_sset(int64_t p) {
  const auto s = s_set(p);
  const auto usable = usable_s_set(p);
  Report r;
  r.command = "sset";
  r.params = {{"p", p}};
  r.result = {{"s_set", s}, {"usable", usable}};
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  os << "}";
  r.text.push_back(os.str());
  return r;
}

Complex parse_tau(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)\s*([+-])\s*([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)\s*\*?\s*i\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw InvalidArgument("tau must look like 're+im i', got '" + s + "'");
  Real im(m[3].str());
  if (m[2].str() == "-") im = -im;
  return Complex(Real(m[1].str()), im);
}

Report cmd_eval(int64_t p, const std::string& tau_text, const RunConfig& cfg, const QSeries* series) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  ScopedPrecision guard(cfg.precision);
  const Complex tau = parse_tau(tau_text);
  if (tau.im <= 0) throw InvalidArgument("tau must lie in the upper half plane");
  const auto ev = hauptmodul_evaluate(p, tau, cfg.precision, series);
  const int digits = cfg.precision.decimal_digits;
  Report r;
  r.command = "eval";
  r.params = {{"p", p}, {"tau", tau_text}, {"decimal_digits", digits}};
  r.result = {{"re", ev.value.re.str(digits)}, {"im", ev.value.im.str(digits)}, {"error_bound", ev.error_bound.str(6)}};
  r.text.push_back("j*_" + std::to_string(p) + "(tau) = " + ev.value.re.str(digits) + " + " +
                   ev.value.im.str(digits) + " i");
  return r;
}

// "x:y,x:y,..."
std::vector<InterpolationPair> parse_pairs(const std::string& s) {
  std::vector<InterpolationPair> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidArgument("pair '" + item + "' must be x:y");
    InterpolationPair pr;
    try {
      BigInt x(item.substr(0, colon));
      BigInt y(item.substr(colon + 1));
      pr.x_mag = x < 0 ? BigInt(-x) : x;
      pr.y_mag = y < 0 ? BigInt(-y) : y;
      pr.x_sign = x < 0 ? Sign::minus : Sign::plus;
      pr.y_sign = y < 0 ? Sign::minus : Sign::plus;
    } catch (const std::runtime_error&) {
      throw InvalidArgument("pair '" + item + "' is not a pair of integers");
    }
    out.push_back(pr);
  }
  if (out.empty()) throw InvalidArgument("no pairs given");
  return out;
}

Report cmd_interpolate(const std::string& pairs_text, int64_t d) {
  const auto pairs = parse_pairs(pairs_text);
  if (d > 0 && class_number(-d) + 1 != static_cast<int64_t>(pairs.size()))
    throw DataError("h(-" + std::to_string(d) + ") + 1 = " + std::to_string(class_number(-d) + 1) +
                    " pairs required, got " + std::to_string(pairs.size()));
  const auto poly = interpolate(pairs, d);
  Report r;
  r.command = "interpolate";
  r.params = {{"pairs", pairs_text}, {"d", d}};
  json coeffs = json::array();
  for (const auto& c : poly.coefficients) coeffs.push_back(exact(c));
  r.result = {{"polynomial", poly.to_string()}, {"coefficients", coeffs}, {"degree", poly.degree()}};
  r.text.push_back("Y = " + poly.to_string());
  return r;
}

int default_digits() {
  if (const char* env = std::getenv("CMFORGE_PRECISION")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return PrecisionConfig{}.decimal_digits;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cmforge: CM values of Hauptmoduls on Fricke groups", "cmforge"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.precision.decimal_digits = default_digits();
  std::string format = "text";
  std::string ramified = "of_mD";
  std::string strategy = "search";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--digits", cfg.precision.decimal_digits, "Decimal digits (env CMFORGE_PRECISION)")
      ->check(CLI::PositiveNumber);
  app.add_option("--guard", cfg.precision.guard_digits, "Guard digits")->check(CLI::PositiveNumber);
  app.add_option("--max-terms", cfg.precision.max_terms, "Series term limit")->check(CLI::PositiveNumber);
  app.add_option("--ramified", ramified, "Ramified exponent variant")->check(CLI::IsMember({"of_m", "of_mD"}));
  app.add_option("--series", cfg.series_path, "QSeries data file");
  app.add_option("--base", cfg.base_discriminant, "Base discriminant |D| for classpoly");
  app.add_option("--strategy", strategy, "Sign strategy")->check(CLI::IsMember({"search", "numeric"}));

  int64_t p = 0, d = 0, D = 0, beta = -1, mu = -1, max_abs = 500;
  int count = 5, threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool breakdown = false;
  std::string tau, pairs_text;

  auto* gz = app.add_subcommand("gznorm", "Exact factored CM value norm");
  gz->add_option("--p", p)->required();
  gz->add_option("--d", d)->required();
  gz->add_option("--D", D)->required();
  gz->add_option("--beta", beta);
  gz->add_option("--mu", mu);
  gz->add_flag("--terms", breakdown, "Per-term breakdown");

  auto* cc = app.add_subcommand("crosscheck", "Exact norm vs high-precision evaluation");
  cc->add_option("--p", p)->required();
  cc->add_option("--d", d)->required();
  cc->add_option("--D", D)->required();
  cc->add_option("--beta", beta);
  cc->add_option("--mu", mu);

  auto* grid = app.add_subcommand("crossgrid", "Batch crosscheck over discriminant pairs");
  grid->add_option("--p", p)->required();
  grid->add_option("--max", max_abs, "Largest |d|, |D|");
  grid->add_option("--pairs", count, "Number of pairs");
  grid->add_option("--threads", threads, "Worker threads");

  auto* cp = app.add_subcommand("classpoly", "Hilbert class polynomial for j*_p");
  cp->add_option("--p", p)->required();
  cp->add_option("--d", d)->required();
  cp->add_option("--beta", beta);

  auto* hg = app.add_subcommand("heegner", "Heegner representatives for Gamma_0(p)");
  hg->add_option("--d", d)->required();
  hg->add_option("--p", p)->required();
  hg->add_option("--beta", beta);

  auto* ss = app.add_subcommand("sset", "Class-number-one discriminants admissible mod 4p");
  ss->add_option("--p", p)->required();

  auto* ev = app.add_subcommand("eval", "Evaluate j*_p at a point");
  ev->add_option("--p", p)->required();
  ev->add_option("--tau", tau, "re+im i")->required();

  auto* ip = app.add_subcommand("interpolate", "Exact interpolation of signed (X, Y) pairs");
  ip->add_option("--pairs", pairs_text, "x:y,x:y,...")->required();
  ip->add_option("--d", d, "Check the pair count against h(-d)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  cfg.output_format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  cfg.ramified_exponent = parse_ramified_exponent(ramified);
  cfg.strategy = parse_sign_strategy(strategy);

  try {
    std::optional<QSeries> series;
    if (!cfg.series_path.empty()) series = load_qseries(cfg.series_path);
    const QSeries* sp = series ? &*series : nullptr;

    Report report;
    int code = kOk;
    if (gz->parsed()) {
      report = cmd_gznorm(make_params(p, d, opt(beta), D, opt(mu)), cfg, breakdown);
    } else if (cc->parsed()) {
      bool pass = false;
      report = cmd_crosscheck(make_params(p, d, opt(beta), D, opt(mu)), cfg, sp, pass);
      if (!pass) code = kCrosscheckFail;
    } else if (grid->parsed()) {
      if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
      bool pass = false;
      report = cmd_crossgrid(p, max_abs, count, threads, cfg, sp, pass);
      if (!pass) code = kCrosscheckFail;
    } else if (cp->parsed()) {
      report = cmd_classpoly(p, d, opt(beta), cfg, sp);
    } else if (hg->parsed()) {
      report = cmd_heegner(d, p, opt(beta));
    } else if (ss->parsed()) {
      report = cmd_sset(p);
    } else if (ev->parsed()) {
      report = cmd_eval(p, tau, cfg, sp);
    } else if (ip->parsed()) {
      report = cmd_interpolate(pairs_text, d);
    }
    emit(report, cfg.output_format, out);
    if (code == kCrosscheckFail) err << "crosscheck FAIL\n";
    return code;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataRejected;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const IllConditionedError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecision;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace cmforge::cli
