#include "doctest.h"
#include "helpers.hpp"
#include "kronlab/io.hpp"
#include "kronlab/verify.hpp"

using namespace kronlab;

TEST_SUITE("cli") {
  TEST_CASE("json round trips") {
    Rational r(-7, 3);
    CHECK(to_json(r) == "-7/3");
    CHECK(rational_from_json(to_json(r)) == r);
    auto g = testing_util::sqrt5();
    CHECK(cyclotomic_from_json(to_json(g)) == g);
    auto f = qs_from_integers({0, 1, -24, 252});
    CHECK(qseries_from_json(to_json(f)) == f);
    CHECK(monomial_key(-1, 2) == "X-1_Y2");
  }

  TEST_CASE("character selection") {
    CHECK(select_character(5, "trivial").is_trivial());
    CHECK(select_character(5, "1") == testing_util::quadratic5());
    CHECK(select_character(5, "auto") == testing_util::quadratic5());
    CHECK(select_character(1, "auto").is_trivial());
    CHECK_THROWS_AS(select_character(5, "9"), ConfigError);
    CHECK_THROWS_AS(select_character(5, "x"), ConfigError);
    CHECK_THROWS_AS(select_identity_character(12, "auto"), ConfigError);
    CHECK_THROWS_AS(select_identity_character(3, "1"), ParityError);
  }

  TEST_CASE("suite reports carry their checks") {
    RunConfig cfg;
    cfg.level = 5;
    cfg.kmax = 6;
    auto rep = run_suite("expansions", cfg);
    CHECK(rep.pass());
    auto j = rep.to_json();
    CHECK(j["suite"] == "expansions");
    CHECK(j["checks"].size() == rep.checks.size());
    CHECK_THROWS_AS(run_suite("nonsense", cfg), ConfigError);
  }
}
