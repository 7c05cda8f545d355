#include "doctest.h"
#include "helpers.hpp"
#include "kronlab/bernoulli.hpp"
#include "kronlab/cyclotomic.hpp"
#include "kronlab/linalg.hpp"
#include "kronlab/ntheory.hpp"
#include "kronlab/rational.hpp"

using namespace kronlab;

TEST_SUITE("arith") {
  TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (unsigned n = 0; n <= 30; ++n) CHECK(bernoulli_number(n) == oracle::bernoulli(n));
  }

  TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_polynomial(2, Rational(0)) == Rational(1, 6));
    CHECK(bernoulli_polynomial(1, Rational(1, 2)) == 0);
    CHECK(bernoulli_polynomial(2, Rational(1, 5)) == Rational(1, 150));
    // B_n(x + 1) - B_n(x) = n x^{n-1}
    for (unsigned n = 1; n <= 10; ++n) {
      Rational x(3, 7);
      CHECK(bernoulli_polynomial(n, x + 1) - bernoulli_polynomial(n, x) == Rational(n) * rpow(x, n - 1));
    }
  }

  TEST_CASE("rationals") {
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(5)) == "5/1");
    CHECK(rational_from_string("-10/4") == Rational(-5, 2));
    CHECK(rpow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(binomial(10, 3) == 120);
    CHECK(factorial(10) == 3628800);
  }

  TEST_CASE("cyclotomic arithmetic") {
    auto i = Cyclotomic::zeta(4);
    CHECK(i * i == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta(5) * Cyclotomic::zeta(5, 4) == Cyclotomic(1));
    auto g = testing_util::sqrt5();
    CHECK(g * g == Cyclotomic(5));
    CHECK(g.conj() == g);
    // mixed orders lift to the lcm
    auto z3 = Cyclotomic::zeta(3), z4 = Cyclotomic::zeta(4);
    CHECK((z3 * z4).order() % 12 == 0);
    CHECK(z3 * z4 == Cyclotomic::zeta(12, 7));
    CHECK(g / g == Cyclotomic(1));
    CHECK((g + Cyclotomic(1)).inverse() * (g + Cyclotomic(1)) == Cyclotomic(1));
  }

  TEST_CASE("cyclotomic embedding") {
    CHECK(std::abs(Cyclotomic(1).embed_complex() - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(Cyclotomic::zeta(4).embed_complex() - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs(testing_util::sqrt5().embed_complex() - std::complex<double>(std::sqrt(5.0), 0)) < 1e-14);
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(euler_phi(12) == 4);
  }

  TEST_CASE("exact linear algebra") {
    CMatrix a{{Cyclotomic(1), Cyclotomic(2)}, {Cyclotomic(3), Cyclotomic(4)}, {Cyclotomic(4), Cyclotomic(6)}};
    CHECK(matrix_rank(a) == 2);
    auto x = solve_exact(a, {Cyclotomic(5), Cyclotomic(11), Cyclotomic(16)});
    REQUIRE(x);
    CHECK((*x)[0] == Cyclotomic(1));
    CHECK((*x)[1] == Cyclotomic(2));
    CHECK_FALSE(solve_exact(a, {Cyclotomic(5), Cyclotomic(11), Cyclotomic(17)}));
    CMatrix sing{{Cyclotomic(1), Cyclotomic(2)}, {Cyclotomic(2), Cyclotomic(4)}};
    CHECK(matrix_rank(sing) == 1);
    CHECK_FALSE(solve_exact(sing, {Cyclotomic(1), Cyclotomic(2)}));
  }

  TEST_CASE("elementary number theory") {
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(prime_factors(60) == std::vector<long>{2, 3, 5});
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    CHECK(mod_pos(-3, 5) == 2);
  }
}
