#include "doctest.h"
#include "helpers.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/kronecker.hpp"
#include "kronlab/modforms.hpp"
#include "kronlab/numeric.hpp"

using namespace kronlab;
using cd = std::complex<double>;
using testing_util::quadratic5;
using testing_util::rel;

TEST_SUITE("numeric") {
  TEST_CASE("theta function") {
    cd tau(0.1, 0.9);
    CHECK(std::abs(theta<double>(tau, cd(0))) == 0.0);
    for (cd u : {cd(0.3, 0.1), cd(-0.2, 0.4), cd(0.05, -0.3)})
      CHECK(std::abs(theta<double>(tau, -u) + theta<double>(tau, u)) < 1e-12 * std::abs(theta<double>(tau, u)));
    // theta'(0) = 2 pi i eta^3 / (2 pi i) in this normalization: q^{1/8} prod (1 - q^n)^3
    CHECK(rel(theta_prime0<double>(tau), std::pow(oracle::eta(tau), 3)) < 1e-12);
  }

  TEST_CASE("Kronecker function") {
    cd tau(0, 2), u(0.3, 0), v(0, 0.4);
    CHECK(rel(eval_F<double>(tau, u, v), oracle::kronecker(tau, u, v)) < 1e-10);
    cd t2(0.2, 1.3), a(0.21, -0.1), b(-0.3, 0.25);
    CHECK(rel(eval_F<double>(t2, a, b), eval_F<double>(t2, b, a)) < 1e-12);
    CHECK(std::abs(1e-4 * eval_F<double>(t2, cd(1e-4), b) - 1.0) < 1e-3);
    CHECK_THROWS_AS(eval_F<double>(t2, cd(0), b), PoleError);
    CHECK(rel(eval_F_chi<double>(t2, a, b, trivial_character(1)), eval_F<double>(t2, a, b)) < 1e-14);
  }

  TEST_CASE("jet evaluation matches the character sum") {
    auto q = quadratic5();
    auto J = kron_laurent(q, 30, 14).jet;
    cd tau(-0.1, 1.05), u(0.04, 0.02), v(-0.03, 0.01);
    CHECK(rel(eval_jet<double>(J, tau, u, v), eval_F_chi<double>(tau, u, v, q)) < 1e-9);
  }

  TEST_CASE("transformation laws at level five") {
    auto q = quadratic5();
    const cd twopii(0, 2 * oracle::kPi);
    cd tau(0.13, 0.8), u(0.2, -0.1), v(-0.15, 0.3);
    for (auto g : {IntMatrix{1, 0, 5, 1}, IntMatrix{2, 1, 5, 3}}) {
      cd j = double(g.c) * tau + double(g.d);
      cd lhs = eval_F_chi<double>((double(g.a) * tau + double(g.b)) / j, u / j, v / j, q);
      cd rhs = q(g.d).embed_complex() * j * std::exp(double(g.c) * u * v / (twopii * j)) * eval_F_chi<double>(tau, u, v, q);
      CHECK(rel(lhs, rhs) < 1e-9);
    }
    cd lhs = eval_F_chi<double>(tau, u + twopii * (5.0 * tau + 1.0), v - twopii * 5.0 * tau, q);
    // n = 1, s = 1, m = -1, r = 0
    cd rhs = std::exp(-twopii * tau * (25.0 * -1.0) + 5.0 * u - 5.0 * v) * eval_F_chi<double>(tau, u, v, q);
    CHECK(rel(lhs, rhs) < 1e-9);
  }

  TEST_CASE("Atkin-Lehner matrices") {
    auto w = atkin_lehner_matrix(6, 2);
    CHECK(w.det() == 2);
    CHECK(w.a % 2 == 0);
    CHECK(w.c % 6 == 0);
    CHECK(w.d % 2 == 0);
    auto wn = atkin_lehner_matrix(5, 5);
    CHECK(wn.a == 0);
    CHECK(wn.b == -1);
    CHECK(wn.c == 5);
    CHECK(atkin_lehner_matrix(5, 1).det() == 1);
  }

  TEST_CASE("slash operators") {
    auto q = quadratic5();
    // G_{k,chi} | W_N = N^{k/2} W(chi)^-1 H_{k,chi}
    int k = 4;
    auto g = eisenstein_g_chi(k, q, 200).series;
    auto h = eisenstein_h_chi(k, q, 200).series;
    IntMatrix W = atkin_lehner_matrix(5, 5);
    for (cd tau : {cd(0.1, 0.5), cd(-0.2, 0.7)}) {
      auto lhs = eval_slashed<double>(g, k, W, tau, 1e-9).value;
      auto rhs = eval_qseries<double>(h, tau, k).value * 25.0 / std::sqrt(5.0);
      CHECK(rel(lhs, rhs) < 1e-8);
    }
    CHECK_THROWS_AS(eval_slashed<double>(g.truncate(5), k, W, cd(0, 2), 1e-10), PrecisionError);
    auto glong = eisenstein_g_chi(k, q, 800).series;
    for (long M : {1L, 5L}) {
      auto v = eval_slashed<double>(glong, k, atkin_lehner_matrix(5, M), cd(0, 10), 1e-10).value;
      CHECK(std::abs(v - cusp_limit(CuspKind::G, k, q, M).embed_complex()) < 1e-8);
    }
  }

  TEST_CASE("cusp form periods agree with quadrature") {
    auto delta = testing_util::series_of(oracle::delta_coeffs(80));
    auto p = cusp_periods<double>(delta, 12, 1, 1);
    double scale = 0;
    for (auto z : p.r) scale = std::max(scale, std::abs(z));
    for (int n = 0; n <= 10; ++n) {
      cd ref = oracle::period(oracle::delta, n);
      CHECK(std::abs(p.r[n] - ref) < 1e-10 * scale);
      // i^{n+1} times a real number
      cd unit = p.r[n] / std::pow(cd(0, 1), n + 1);
      CHECK(std::abs(unit.imag()) < 1e-12 * scale);
    }
    // r_10 from L(Delta, 11)
    auto dl = oracle::delta_coeffs(3000);
    double L = 0;
    for (int m = 2999; m >= 1; --m) L += dl[m].get_d() * std::pow(double(m), -11.0);
    double fact10 = 3628800.0;
    cd viaL = std::pow(cd(0, 1), 11) * fact10 / std::pow(2 * oracle::kPi, 11) * L;
    CHECK(rel(p.r[10], viaL) < 1e-8);
    CHECK_THROWS_AS(cusp_periods<double>(delta, 12, 1, -1), ConsistencyError);
  }

  TEST_CASE("twisted periods agree with quadrature") {
    auto q = quadratic5();
    auto f = testing_util::series_of(oracle::level5_coeffs(120));
    auto chi = testing_util::char_values(q);
    auto fc = [&](cd t) { return oracle::twist(oracle::level5_form, chi, t); };
    auto p = twisted_cusp_periods<double>(f, 4, q);
    auto pf = cusp_periods<double>(f, 4, 5, 1);
    double sc = 0, sf = 0;
    for (auto z : p.r) sc = std::max(sc, std::abs(z));
    for (auto z : pf.r) sf = std::max(sf, std::abs(z));
    for (int n = 0; n <= 2; ++n) {
      CHECK(std::abs(p.r[n] - oracle::period(fc, n)) < 1e-9 * sc);
      CHECK(std::abs(pf.r[n] - oracle::period(oracle::level5_form, n)) < 1e-9 * sf);
    }
  }

  TEST_CASE("incomplete gamma") {
    // Gamma(1, x) = e^-x, Gamma(3, x) = (x^2 + 2x + 2) e^-x
    CHECK(std::abs(upper_gamma_int<double>(0, 2.0) - std::exp(-2.0)) < 1e-15);
    CHECK(std::abs(upper_gamma_int<double>(2, 1.5) - (1.5 * 1.5 + 3 + 2) * std::exp(-1.5)) < 1e-14);
  }

  TEST_CASE("bigfloat instantiation") {
    using B = BigReal;
    Cplx<B> tau(B(0), B(1)), u(B("0.3"), B(0)), v(B(0), B("0.2"));
    auto x = eval_F<B>(tau, u, v);
    CHECK(std::abs(cd(static_cast<double>(x.real()), static_cast<double>(x.imag())) - eval_F<double>(cd(0, 1), cd(0.3), cd(0, 0.2))) < 1e-13);
    auto delta = testing_util::series_of(oracle::delta_coeffs(100));
    auto p = cusp_periods<B>(delta, 12, 1, 1);
    CHECK(p.eigen_residual < B("1e-30"));
  }
}
