#include "doctest.h"

#include <set>

#include "cmforge/arith.hpp"
#include "cmforge/errors.hpp"
#include "cmforge/quadforms.hpp"
#include "oracles.hpp"

using namespace cmforge;

TEST_SUITE("quadforms") {

TEST_CASE("reduce") {
  CHECK(reduce({1, 0, 1}) == QuadraticForm{1, 0, 1});
  CHECK(reduce({1, 1, 10}) == QuadraticForm{1, 1, 10});
  CHECK(reduce({2, 1, 5}) == QuadraticForm{2, 1, 5});
  CHECK(reduce({47, 41, 9}) == QuadraticForm{1, 1, 3});
  CHECK(reduce({5, -1, 2}) == QuadraticForm{2, 1, 5});
  CHECK(reduce({5, 9, 6}) == QuadraticForm{2, 1, 5});
  CHECK_THROWS_AS(reduce({1, 3, 1}), InvalidArgument);
  CHECK_THROWS_AS(reduce({-1, 0, -1}), InvalidArgument);
}

TEST_CASE("reduced forms of -39") {
  const auto forms = reduced_forms(-39);
  const std::set<QuadraticForm> got(forms.begin(), forms.end());
  const std::set<QuadraticForm> want{{1, 1, 10}, {2, 1, 5}, {2, -1, 5}, {3, 3, 4}};
  CHECK(got == want);
  for (const auto& f : forms) CHECK(is_reduced(f));
}

TEST_CASE("class numbers") {
  CHECK(class_number(-39) == 4);
  CHECK(class_number(-11) == 1);
  CHECK(class_number(-47) == 5);
  CHECK(class_number(-163) == 1);
  CHECK_THROWS_AS(class_number(-12), InvalidArgument);
}

TEST_CASE("class number against brute-force count") {
  for (int64_t disc = -3; disc >= -2000; --disc) {
    if (!is_fundamental_discriminant(disc)) continue;
    INFO("disc=" << disc);
    REQUIRE(class_number(disc) == oracle::brute_class_number(disc));
  }
}

TEST_CASE("admissible residues") {
  const auto r = admissible_residues(-11, 47);
  CHECK(std::find(r.begin(), r.end(), 41) != r.end());
  CHECK(admissible_residues(-3, 2).empty());
  CHECK_FALSE(admissible_residues(-39, 47).empty());
  for (int64_t b : admissible_residues(-39, 47)) CHECK(mod(b * b + 39, 188) == 0);
  // exhaust residues mod 4p
  for (int64_t p : {2, 3, 5, 7, 13, 47})
    for (int64_t disc : {-3, -4, -7, -8, -11, -19, -20, -39, -43, -67, -163}) {
      std::vector<int64_t> want;
      for (int64_t b = 0; b < 2 * p; ++b)
        if (mod(b * b - disc, 4 * p) == 0) want.push_back(b);
      CHECK(admissible_residues(disc, p) == want);
    }
}

TEST_CASE("heegner representatives") {
  const auto one = heegner_reps(-11, 47, 41);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == QuadraticForm{47, 41, 9});
  CHECK(heegner_reps(-39, 47, admissible_residues(-39, 47).front()).size() == 4);
  CHECK(heegner_reps(-20, 3, 2).size() == 2);
  CHECK_THROWS_AS(heegner_reps(-11, 47, 40), InvalidArgument);
}

TEST_CASE("heegner representatives cover every class once") {
  for (int64_t p : {2, 3, 5, 7, 13, 47})
    for (int64_t disc = -7; disc >= -400; --disc) {
      if (!is_fundamental_discriminant(disc)) continue;
      for (int64_t beta : admissible_residues(disc, p)) {
        INFO("p=" << p << " disc=" << disc << " beta=" << beta);
        const auto reps = heegner_reps(disc, p, beta);
        REQUIRE(static_cast<int64_t>(reps.size()) == oracle::brute_class_number(disc));
        std::set<QuadraticForm> classes;
        for (const auto& f : reps) {
          CHECK(f.discriminant() == disc);
          CHECK(f.is_primitive());
          CHECK(f.a % p == 0);
          CHECK(mod(f.b - beta, 2 * p) == 0);
          classes.insert(reduce(f));
        }
        CHECK(classes.size() == reps.size());
      }
    }
}

TEST_CASE("heegner points") {
  CHECK(heegner_point({47, 41, 9}) == HeegnerPoint{41, 47, -11});
  CHECK(heegner_point({1, 0, 1}) == HeegnerPoint{0, 1, -4});
  CHECK(heegner_point({2, 1, 5}) == HeegnerPoint{1, 2, -39});
}

}
