#include "doctest.h"

#include "cmforge/arith.hpp"
#include "cmforge/cmvalue.hpp"
#include "cmforge/errors.hpp"
#include "oracles.hpp"

using namespace cmforge;

TEST_SUITE("cmvalue") {

TEST_CASE("rho values") {
  CHECK(rho(1, 11) == 1);
  CHECK(rho(9, 11) == oracle::divisor_sum_rho(9, 11));
  CHECK(rho(217, 163) == oracle::divisor_sum_rho(217, 163));
  CHECK_THROWS_AS(rho(0, 11), InvalidArgument);
}

TEST_CASE("rho against divisor sum") {
  for (int64_t D : {11, 19, 39, 43, 47, 67, 163})
    for (int64_t n = 1; n <= 10000; ++n) {
      INFO("n=" << n << " D=" << D);
      REQUIRE(rho(n, D) == oracle::divisor_sum_rho(n, D));
    }
}

TEST_CASE("rho_checked rejects non-integers") {
  CHECK(rho_checked(Rational(9), 11, "n") == rho(9, 11));
  CHECK_THROWS_AS(rho_checked(Rational(9, 2), 11, "n"), IntegralityError);
  CHECK_THROWS_AS(rho_checked(Rational(-3), 11, "n"), IntegralityError);
}

TEST_CASE("o(m)") {
  CHECK(o_of_m(1, 11) == 1);
  CHECK(o_of_m(Rational(1, 11), 11) == 0);
  CHECK(o_of_m(Rational(3, 4), 39) == 2);
  CHECK_THROWS_AS(o_of_m(0, 11), InvalidArgument);
}

TEST_CASE("kappa context") {
  CHECK_NOTHROW(KappaContext(11, 47));
  CHECK_THROWS_AS(KappaContext(4, 47), InvalidArgument);
  CHECK_THROWS_AS(KappaContext(3, 47), InvalidArgument);
  CHECK_THROWS_AS(KappaContext(12, 47), InvalidArgument);
}

TEST_CASE("diff set for m = 1, D = 11, N = 47") {
  const auto diff = diff_set(1, KappaContext(11, 47));
  // local symbols (-47, -11)_q at 2 and 11 by search, 47 by the product formula
  const int s2 = oracle::hilbert(-47, -11, 2);
  const int s11 = oracle::hilbert(-47, -11, 11);
  const int s47 = -s2 * s11;  // symbol at infinity is -1
  std::vector<int64_t> want;
  if (s2 == -1) want.push_back(2);
  if (s11 == -1) want.push_back(11);
  if (s47 == -1) want.push_back(47);
  CHECK(diff == want);
}

TEST_CASE("diff set against local search") {
  for (int64_t D : {7, 11, 19, 20, 24, 39})
    for (int64_t p : {2, 3, 5, 7})
      for (int64_t num = 1; num <= 12; ++num)
        for (int64_t den : {1, 2, 3, 4, 8, 12}) {
          const Rational m(num, den);
          const auto diff = diff_set(m, KappaContext(D, p));
          INFO("D=" << D << " p=" << p << " m=" << m);
          CHECK(diff.size() % 2 == 1);
          for (int64_t q : {2, 3, 5, 7, 11, 13}) {
            const bool member = std::find(diff.begin(), diff.end(), q) != diff.end();
            CHECK(member == (oracle::hilbert(-m.num() * m.den() * p, -D, q) == -1));
            if (member && D % q != 0) CHECK(kronecker(-D, q) != 1);
          }
        }
}

TEST_CASE("diff set never holds a split prime") {
  for (int64_t D : {11, 19, 43, 67, 163})
    for (int64_t num = 1; num <= 200; ++num) {
      const auto diff = diff_set(Rational(num, D), KappaContext(D, 47));
      for (int64_t q : diff) CHECK(kronecker(-D, q) != 1);
    }
}

}
