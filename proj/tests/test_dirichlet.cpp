#include "doctest.h"
#include "helpers.hpp"
#include "kronlab/dirichlet.hpp"
#include "kronlab/errors.hpp"

using namespace kronlab;

TEST_SUITE("dirichlet") {
  TEST_CASE("enumeration") {
    auto c1 = enumerate_characters(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0](0) == Cyclotomic(1));
    auto c5 = enumerate_characters(5);
    CHECK(c5.size() == 4);
    int real_nontrivial = 0;
    for (auto& c : c5)
      if (c.is_real() && !c.is_trivial()) ++real_nontrivial;
    CHECK(real_nontrivial == 1);
    CHECK(c5[1].is_real());
    CHECK_FALSE(c5[1].is_trivial());
    auto c3 = enumerate_characters(3);
    CHECK(c3.size() == 2);
    CHECK_FALSE(c3[1].is_even());
    CHECK(enumerate_characters(13).size() == 12);
  }

  TEST_CASE("parity and primitivity") {
    auto q = testing_util::quadratic5();
    CHECK(q.is_even());
    CHECK(q.is_primitive());
    CHECK(trivial_character(1).is_primitive());
    CHECK_FALSE(trivial_character(5).is_primitive());
    CHECK(q(0).is_zero());
    CHECK(q(2) == Cyclotomic(-1));
    CHECK(q(4) == Cyclotomic(1));
  }

  TEST_CASE("gauss sums") {
    CHECK(gauss_sum(trivial_character(1)) == Cyclotomic(1));
    CHECK(gauss_sum(testing_util::quadratic5()) == testing_util::sqrt5());
    for (long N : {5L, 7L, 13L})
      for (auto& c : enumerate_characters(N)) {
        if (!c.is_primitive()) continue;
        CHECK(gauss_sum(c) * gauss_sum(c.conj()) == c(-1) * Cyclotomic(N));
      }
  }

  TEST_CASE("twisted bernoulli numbers") {
    CHECK(twisted_bernoulli(0, trivial_character(1)) == Cyclotomic(1));
    auto q = testing_util::quadratic5();
    CHECK(twisted_bernoulli(3, q).is_zero());
    CHECK(twisted_bernoulli(2, q) == Cyclotomic(Rational(4, 5)));
    for (auto& c : enumerate_characters(13)) {
      if (!c.is_primitive()) continue;
      for (unsigned n = 0; n <= 8; ++n) CHECK(twisted_bernoulli(n, c) == twisted_bernoulli_genfun(n, c));
    }
  }

  TEST_CASE("negative L-values") {
    CHECK(l_value_negative(trivial_character(1), 2) == Cyclotomic(Rational(-1, 12)));
    CHECK(l_value_negative(testing_util::quadratic5(), 2) == Cyclotomic(Rational(-2, 5)));
    CHECK_THROWS_AS(l_value_negative(testing_util::quadratic5(), 3), ParityError);
  }

  TEST_CASE("numeric L-values") {
    const double pi = oracle::kPi;
    CHECK(std::abs(l_value_numeric(trivial_character(1), 2.0).value - pi * pi / 6) < 1e-12);
    CHECK(std::abs(l_value_numeric(trivial_character(1), 4.0).value - std::pow(pi, 4) / 90) < 1e-12);
    std::vector<int> chi5{0, 1, -1, -1, 1};
    double direct = oracle::dirichlet_l(chi5, 2, 2000000);
    CHECK(std::abs(l_value_numeric(testing_util::quadratic5(), 2.0).value - direct) < 1e-11);
    // continued to s = -1 and compared with -B_{2,chi}/2
    auto lc = l_value_numeric(testing_util::quadratic5(), -1.0, LMode::Continued);
    CHECK(std::abs(lc.value - (-0.4)) < 1e-10);
  }
}
