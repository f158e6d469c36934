#include "doctest.h"

#include <set>
#include <tuple>

#include "cmforge/arith.hpp"
#include "cmforge/cmvalue.hpp"
#include "cmforge/errors.hpp"
#include "cmforge/gzrhs.hpp"
#include "cmforge/quadforms.hpp"
#include "oracles.hpp"

using namespace cmforge;

namespace {

std::vector<int64_t> admissible_discs(int64_t p, int64_t max) {
  std::vector<int64_t> out;
  for (int64_t x = 5; x <= max; ++x)
    if (is_fundamental_discriminant(-x) && !admissible_residues(-x, p).empty()) out.push_back(x);
  return out;
}

BigInt norm_of(int64_t p, int64_t d, int64_t D) {
  const auto nm = norm_magnitude(gz_log_norm(GZParams::with_default_residues(p, d, D)));
  REQUIRE(nm.integral);
  return nm.value;
}

}  // namespace

TEST_SUITE("gzrhs") {

TEST_CASE("params validation") {
  CHECK_THROWS_WITH_AS(GZParams::with_default_residues(47, 39, 39), "d and D must be distinct", InvalidArgument);
  CHECK_THROWS_AS(GZParams::with_default_residues(47, 39, 4), InvalidArgument);
  CHECK_THROWS_AS(GZParams::with_default_residues(47, 39, 3), InvalidArgument);
  CHECK_THROWS_AS(GZParams::with_default_residues(46, 39, 11), InvalidArgument);
  CHECK_THROWS_AS(GZParams::make(47, 11, 40, 39, 0), InvalidArgument);
  // -12 is not fundamental
  CHECK_THROWS_AS(GZParams::with_default_residues(47, 12, 11), InvalidArgument);
  const auto gp = GZParams::with_default_residues(47, 11, 19);
  CHECK(gp.beta == 41);
  CHECK(gp.g == 1);
  CHECK(gp.swapped().d == 19);
  CHECK(gp.swapped().beta == gp.mu);
  CHECK(gp.swapped().mu == 41);
}

TEST_CASE("ramified exponent parsing") {
  CHECK(parse_ramified_exponent("of_m") == RamifiedExponent::of_m);
  CHECK(parse_ramified_exponent("of_mD") == RamifiedExponent::of_mD);
  CHECK_THROWS_AS(parse_ramified_exponent("x"), InvalidArgument);
}

TEST_CASE("enumeration matches a wide brute-force scan") {
  for (int64_t p : {2, 3, 5, 13, 47}) {
    const auto discs = admissible_discs(p, 120);
    for (size_t i = 0; i + 1 < discs.size(); i += 3) {
      const auto gp = GZParams::with_default_residues(p, discs[i], discs[i + 1]);
      std::set<std::tuple<int, int64_t, int64_t>> want;
      const __int128 bound = static_cast<__int128>(gp.g) * gp.g * gp.d * gp.D;
      for (int sign : {1, -1})
        for (int64_t y = 0; y < gp.D / gp.g; ++y)
          for (int64_t n = -2000; n <= 2000; ++n) {
            const __int128 t = static_cast<__int128>(gp.g) * gp.mu * sign * gp.beta - 2 * n * p * gp.D -
                               static_cast<__int128>(2) * gp.g * p * y;
            if (t * t < bound) want.emplace(sign, y, n);
          }
      std::set<std::tuple<int, int64_t, int64_t>> got;
      for (const auto& t : enumerate_terms(gp)) {
        got.emplace(t.sign, t.y, t.n);
        CHECK(t.m.sign() > 0);
        CHECK(t.m <= Rational(gp.d, 4 * p));
        CHECK((t.m * Rational(gp.D)).is_integer());
      }
      INFO("p=" << p << " d=" << gp.d << " D=" << gp.D);
      CHECK(got == want);
    }
  }
}

TEST_CASE("norms from the p = 47, d = 39 example") {
  CHECK(norm_of(47, 11, 19) == 1);
  CHECK(norm_of(47, 39, 163) == 217);
  CHECK(norm_of(47, 39, 67) == 13);
  CHECK(norm_of(47, 39, 43) == 7);
  CHECK(norm_of(47, 39, 11) == 1);
  CHECK(norm_of(47, 39, 19) == 1);
  const auto s = gz_log_norm(GZParams::with_default_residues(47, 39, 163));
  CHECK(s.exponents() == std::map<int64_t, Rational>{{7, 8}, {31, 8}});
}

TEST_CASE("norm magnitude") {
  PrimeLogSum s;
  CHECK(norm_magnitude(s).expression == "1");
  CHECK(norm_magnitude(s).value == 1);
  s.add(7, 8);
  s.add(31, 8);
  CHECK(norm_magnitude(s).expression == "7*31");
  CHECK(norm_magnitude(s).value == 217);
  s.add(2, 4);
  CHECK_FALSE(norm_magnitude(s).integral);
  s.add(2, -4);
  CHECK(s.exponents().count(2) == 0);
}

TEST_CASE("single-prime contributions") {
  const auto gp = GZParams::with_default_residues(47, 39, 163);
  const KappaContext ctx(gp.D, gp.p);
  int multi = 0, inert = 0;
  for (int64_t k = 1; k <= 3000; ++k) {
    const Rational m(k, gp.D);
    const LatticeTerm term{0, 0, 0, m, 1};
    const auto diff = diff_set(m, ctx);
    if (diff.size() >= 3) {
      ++multi;
      CHECK(term_contribution(term, gp).is_zero());
    } else if (diff.size() == 1 && gp.D % diff[0] != 0) {
      const int64_t q = diff[0];
      const Rational r = m * Rational(gp.D) / Rational(q);
      if (!r.is_integer()) continue;
      ++inert;
      const int64_t weight = int64_t{1} << (o_of_m(m, gp.D) + 1);
      const int64_t want = weight * (ord(m, q) + 1) * oracle::divisor_sum_rho(r.num(), gp.D);
      const auto got = term_contribution(term, gp);
      if (want == 0) {
        CHECK(got.is_zero());
      } else {
        CHECK(got.exponents() == std::map<int64_t, Rational>{{q, Rational(want)}});
      }
    }
  }
  CHECK(multi > 0);
  CHECK(inert > 0);
}

TEST_CASE("structure and symmetry on a grid") {
  for (int64_t p : {2, 3, 5, 7, 13, 47}) {
    const auto discs = admissible_discs(p, 300);
    for (size_t i = 0; i < discs.size(); i += 4)
      for (size_t j = i + 1; j < discs.size(); j += 7) {
        const auto gp = GZParams::with_default_residues(p, discs[i], discs[j]);
        INFO("p=" << p << " d=" << gp.d << " D=" << gp.D);
        const auto s = gz_log_norm(gp);
        CHECK(s.has_nonnegative_integer_exponents());
        CHECK(s == gz_log_norm(gp.swapped()));
      }
  }
}

}
