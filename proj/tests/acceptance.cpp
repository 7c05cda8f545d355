// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/kronecker.hpp"
#include "kronlab/modforms.hpp"
#include "kronlab/numeric.hpp"
#include "kronlab/periods.hpp"

using namespace kronlab;
using cd = std::complex<double>;
using testing_util::quadratic5;
using testing_util::series_of;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Every entry a rational multiple of G_k; returns false on the first entry that is not.
bool entries_are_multiples(const BiPoly& s, const QSeries& gk, int upto) {
  for (const auto& cell : s.cells) {
    if (cell.is_zero()) continue;
    Cyclotomic c = cell[0] / gk[0];
    if (!c.is_rational()) return false;
    for (int n = 0; n < upto; ++n)
      if (!(cell[n] == c * gk[n])) return false;
  }
  return true;
}

RankOneResult extract(const DirichletCharacter& chi, int k, int P) {
  return extract_rank_one_cusp(product_B_slice(chi, k, P), product_B_cusp_values(chi, k),
                               eisenstein_basis(k, chi.modulus(), P));
}

bool hecke_ok(const QSeries& f, int k, long N) {
  for (long p : {2L, 3L}) {
    auto t = hecke_Tp(f, k, N, p);
    if (!(t == qs_scale(f.truncate(t.prec()), f[static_cast<int>(p)]))) return false;
  }
  return true;
}

Outcome a1() {
  auto t = trivial_character(1);
  const int P = 26;
  std::ostringstream d;
  bool ok = true;
  for (int k : {4, 6, 8, 10, 14}) {
    auto slice = product_B_slice(t, k, P);
    auto C = generating_C(t, k, P);
    auto res = extract(t, k, P);
    auto gk = series_of(oracle::eisenstein(k, P));
    bool mult = entries_are_multiples(slice, gk, P);
    bool eq = slice == C.eisenstein;
    bool m = res.rank == 0 && res.multipliers == C.eis_multipliers;
    ok = ok && mult && eq && m;
    d << " k=" << k << (mult && eq && m ? ":ok" : ":FAIL");
  }
  return {ok, d.str()};
}

Outcome a2() {
  auto t = trivial_character(1);
  const int P = 80;
  auto res = extract(t, 12, P);
  if (res.rank != 1) return {false, "rank " + std::to_string(res.rank)};
  const QSeries& f = *res.eigenform;
  bool delta = f.truncate(26) == series_of(oracle::delta_coeffs(26));
  bool hk = hecke_ok(f, 12, 1);
  auto pf = cusp_periods<double>(f, 12, 1, 1);
  auto Rn = assemble_R<double>(pf.r, pf.r, t, 12, cd(1));
  for (auto& c : Rn.cells) c /= 3628800.0;
  PeterssonFit fit;
  try {
    fit = petersson_fit(res.R, Rn, 1e-6);
  } catch (const ConsistencyError& e) {
    return {false, e.what()};
  }
  double ref = oracle::petersson_delta();
  bool lam = fit.lambda.real() > 0 && std::abs(fit.lambda.real() - ref) < 1e-6 * ref;
  bool ok = delta && hk && fit.max_rel_dev <= 1e-6 && fit.monomials >= 20 && lam;
  return {ok, "delta=" + std::string(delta ? "ok" : "FAIL") + " hecke=" + (hk ? "ok" : "FAIL") +
                  " <D,D>=" + fmt("%.12e", fit.lambda.real()) + " quadrature=" + fmt("%.12e", ref) +
                  " monomials=" + std::to_string(fit.monomials) + " max_dev=" + fmt("%.2e", fit.max_rel_dev)};
}

Outcome a3() {
  auto q = quadratic5();
  const int P = 26;
  auto slice = product_B_slice(q, 2, P);
  auto C = generating_C(q, 2, P);
  auto res = extract(q, 2, P);
  bool eq = slice == C.eisenstein && res.rank == 0;
  double worst = 0;
  cd tau(0, 10);
  for (long M : {1L, 5L}) {
    auto W = atkin_lehner_matrix(5, M);
    auto g = eisenstein_g_chi(2, q, 800).series;
    auto h = eisenstein_h_chi(2, q, 800).series;
    worst = std::max(worst, std::abs(eval_slashed<double>(g, 2, W, tau).value - cusp_limit(CuspKind::G, 2, q, M).embed_complex()));
    worst = std::max(worst, std::abs(eval_slashed<double>(h, 2, W, tau).value - cusp_limit(CuspKind::H, 2, q, M).embed_complex()));
  }
  bool ok = eq && worst <= 1e-8;
  return {ok, std::string("slice=C:") + (eq ? "ok" : "FAIL") + " cusp-limit max err=" + fmt("%.2e", worst)};
}

Outcome a4() {
  auto q = quadratic5();
  const int P = 80;
  auto res = extract(q, 4, P);
  if (res.rank != 1) return {false, "rank " + std::to_string(res.rank)};
  const QSeries& f = *res.eigenform;
  bool hk = hecke_ok(f, 4, 5);
  bool mult = true;
  for (int m = 2; m < 26; ++m)
    for (int n = 2; m * n < 26; ++n)
      if (gcd_l(m, n) == 1 && !(f[m * n] == f[m] * f[n])) mult = false;
  bool eta = f.truncate(26) == series_of(oracle::level5_coeffs(26));
  int eps = atkin_lehner_sign(f, 4, 5);
  auto pf = cusp_periods<double>(f, 4, 5, eps);
  auto pc = twisted_cusp_periods<double>(f, 4, q);
  auto pcb = twisted_cusp_periods<double>(f, 4, q.conj());
  // twisted functional equation, with the twisted periods taken from quadrature
  auto chi = testing_util::char_values(q);
  auto chib = testing_util::char_values(q.conj());
  cd lam = (q(-1) * gauss_sum(q) / gauss_sum(q.conj())).embed_complex();
  double tw = 0, scale = 0, vs_quad = 0;
  std::vector<cd> rq, rqb;
  for (int n = 0; n <= 2; ++n) {
    rq.push_back(oracle::period([&](cd t) { return oracle::twist(oracle::level5_form, chi, t); }, n));
    rqb.push_back(oracle::period([&](cd t) { return oracle::twist(oracle::level5_form, chib, t); }, n));
    scale = std::max(scale, std::abs(rq.back()));
  }
  for (int n = 0; n <= 2; ++n) {
    cd rhs = lam * double(n % 2 ? 1 : -1) * std::pow(5.0, 2 * n + 2 - 4) * rqb[n];
    tw = std::max(tw, std::abs(rq[2 - n] - rhs) / scale);
    vs_quad = std::max(vs_quad, std::abs(pc.r[n] - rq[n]) / scale);
  }
  auto Rn = assemble_R<double>(pf.r, pc.r, q, 4, cd(1));
  for (auto& c : Rn.cells) c /= 2.0;
  PeterssonFit fit;
  try {
    fit = petersson_fit(res.R, Rn, 1e-6);
  } catch (const ConsistencyError& e) {
    return {false, e.what()};
  }
  bool ok = hk && mult && eta && tw <= 1e-8 && vs_quad <= 1e-8 && fit.max_rel_dev <= 1e-6;
  return {ok, std::string("hecke=") + (hk ? "ok" : "FAIL") + " multiplicative=" + (mult ? "ok" : "FAIL") +
                  " eta-product=" + (eta ? "ok" : "FAIL") + " twisted-FE=" + fmt("%.2e", tw) +
                  " periods-vs-quadrature=" + fmt("%.2e", vs_quad) + " fit-dev=" + fmt("%.2e", fit.max_rel_dev) +
                  " <f,f>=" + fmt("%.10e", fit.lambda.real())};
}

Outcome a5() {
  int checked = 0;
  bool ok = true;
  for (long N : {1L, 5L, 13L})
    for (auto& c : enumerate_characters(N)) {
      if (!c.is_even() || !c.is_primitive()) continue;
      auto L = kron_laurent(c, 20, 10).jet;
      auto F = kron_fourier(c, 20, 10).jet;
      ok = ok && L.entries == F.entries && L.polar_u == F.polar_u && L.polar_v == F.polar_v;
      ++checked;
    }
  return {ok, std::to_string(checked) + " characters"};
}

Outcome a6() {
  auto q = quadratic5();
  const cd twopii(0, 2 * oracle::kPi);
  std::mt19937 rng(20260101);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(0.5, 1.5), small(-0.05, 0.05);
  std::uniform_int_distribution<int> one(-1, 1), two(-2, 2);
  double mod = 0, ell = 0, jet = 0;
  int samples = 0;
  for (auto g : {IntMatrix{1, 0, 5, 1}, IntMatrix{2, 1, 5, 3}})
    for (int i = 0; i < 12; ++i, ++samples) {
      cd tau(ux(rng), uy(rng)), u(ux(rng), ux(rng)), v(ux(rng), ux(rng));
      cd j = double(g.c) * tau + double(g.d);
      cd lhs = eval_F_chi<double>((double(g.a) * tau + double(g.b)) / j, u / j, v / j, q);
      cd rhs = q(g.d).embed_complex() * j * std::exp(double(g.c) * u * v / (twopii * j)) * eval_F_chi<double>(tau, u, v, q);
      mod = std::max(mod, testing_util::rel(lhs, rhs));
    }
  for (int i = 0; i < 24; ++i, ++samples) {
    int n = one(rng), m = one(rng), s = two(rng), r = two(rng);
    cd tau(ux(rng), 0.8 + 0.5 * uy(rng) - 0.25), u(ux(rng), ux(rng)), v(ux(rng), ux(rng));
    cd lhs = eval_F_chi<double>(tau, u + twopii * (5.0 * n * tau + double(s)), v + twopii * (5.0 * m * tau + double(r)), q);
    cd rhs = std::exp(-twopii * tau * double(25 * m * n) - 5.0 * m * u - 5.0 * n * v) * eval_F_chi<double>(tau, u, v, q);
    ell = std::max(ell, testing_util::rel(lhs, rhs));
  }
  auto J = kron_laurent(q, 30, 14).jet;
  for (int i = 0; i < 8; ++i) {
    cd tau(0.1 * ux(rng), 1.0 + 0.2 * ux(rng)), u(small(rng), small(rng)), v(small(rng), small(rng));
    jet = std::max(jet, testing_util::rel(eval_jet<double>(J, tau, u, v), eval_F_chi<double>(tau, u, v, q)));
  }
  bool ok = mod <= 1e-9 && ell <= 1e-9 && jet <= 1e-9 && samples >= 20;
  return {ok, std::to_string(samples) + " samples, modular " + fmt("%.2e", mod) + ", elliptic " + fmt("%.2e", ell) +
                  ", jet vs character sum " + fmt("%.2e", jet)};
}

Outcome a7() {
  int cases = 0;
  for (long N : {1L, 5L})
    for (auto& c : enumerate_characters(N)) {
      if (!c.is_even() || !c.is_primitive()) continue;
      for (int k1 = 2; k1 <= 12; k1 += 2)
        for (int k2 = 2; k1 + k2 <= 12; k2 += 2)
          for (int m = 0; k1 + k2 + 2 * m <= 12; ++m) {
            try {
              g_coefficient(k1, k2, m, c, 20);
            } catch (const ConsistencyError& e) {
              return {false, e.what()};
            }
            ++cases;
          }
    }
  return {true, std::to_string(cases) + " cases"};
}

Outcome a8() {
  auto q = quadratic5();
  std::vector<int> vals{0, 1, -1, -1, 1};
  double worst = 0;
  const double pi = oracle::kPi;
  for (int k : {2, 4, 6}) {
    cd lhs = l_value_negative(q, static_cast<unsigned>(k)).embed_complex();
    double direct = oracle::dirichlet_l(vals, k, 2000000);
    cd two_pi_i_k = std::pow(cd(0, 2 * pi), k);
    cd rhs = 2.0 * std::sqrt(5.0) * std::pow(5.0, k - 1) * std::tgamma(double(k)) / two_pi_i_k * direct;
    worst = std::max(worst, std::abs(lhs - rhs));
    auto cont = l_value_numeric(q, cd(1 - k, 0), LMode::Continued).value;
    worst = std::max(worst, std::abs(cont - lhs));
    worst = std::max(worst, std::abs(l_value_numeric(q, cd(k, 0)).value - direct));
  }
  return {worst <= 1e-10, "max err " + fmt("%.2e", worst)};
}

Outcome a9() {
  auto delta = series_of(oracle::delta_coeffs(80));
  auto q = quadratic5();
  auto f5 = series_of(oracle::level5_coeffs(80));
  double fun1 = 0, twist = 0;
  auto fe = [&](const QSeries& f, int k, long N, int eps) {
    std::vector<cd> r;
    double sc = 0;
    for (int n = 0; n <= k - 2; ++n) {
      r.push_back(oracle::period([&](cd t) { return N == 1 ? oracle::delta(t) : oracle::level5_form(t); }, n));
      sc = std::max(sc, std::abs(r.back()));
    }
    auto lib = cusp_periods<double>(f, k, N, eps);
    for (int n = 0; n <= k - 2; ++n) {
      cd rhs = double(n % 2 ? eps : -eps) * std::pow(double(N), 1.0 + n - k / 2.0) * r[n];
      fun1 = std::max(fun1, std::abs(r[k - 2 - n] - rhs) / sc);
      fun1 = std::max(fun1, std::abs(lib.r[n] - r[n]) / sc);
    }
  };
  fe(delta, 12, 1, 1);
  fe(f5, 4, 5, atkin_lehner_sign(f5, 4, 5));
  // twisted: library periods against each other
  auto pc = twisted_cusp_periods<double>(f5, 4, q), pcb = twisted_cusp_periods<double>(f5, 4, q.conj());
  cd lam = (q(-1) * gauss_sum(q) / gauss_sum(q.conj())).embed_complex();
  double sc = 0;
  for (auto z : pc.r) sc = std::max(sc, std::abs(z));
  for (int n = 0; n <= 2; ++n) {
    cd rhs = lam * double(n % 2 ? 1 : -1) * std::pow(5.0, 2 * n + 2 - 4) * pcb.r[n];
    twist = std::max(twist, std::abs(pc.r[2 - n] - rhs) / sc);
  }
  bool ok = fun1 <= 1e-8 && twist <= 1e-8;
  return {ok, "fun1 " + fmt("%.2e", fun1) + ", twisted " + fmt("%.2e", twist)};
}

// r_n(Delta_chi) r_m(Delta) / <Delta, Delta>, n - m odd
template <class R>
std::vector<Cplx<R>> a10_values(std::vector<std::pair<int, int>>* idx) {
  auto t = trivial_character(1);
  auto q = quadratic5();
  auto res = extract(t, 12, 100);
  const QSeries& f = *res.eigenform;
  auto pf = cusp_periods<R>(f, 12, 1, 1);
  auto pc = twisted_cusp_periods<R>(f, 12, q);
  auto Rn = assemble_R<R>(pf.r, pf.r, t, 12, Cplx<R>(R(1)));
  for (auto& c : Rn.cells) c = c / R(3628800);
  auto fit = petersson_fit_big<R>(res.R, Rn, 1e-6);
  // refit in working precision: lambda = sum |Rn|^2 / sum conj(Rn) Rex
  Cplx<R> num(0), den(0);
  for (int a = -1; a <= 11; ++a)
    for (int b = -1; b <= 11; ++b) {
      const auto& ex = res.R.at(a, b);
      if (ex.is_zero()) continue;
      Cplx<R> e = embed<R>(ex), x = Rn.at(a, b);
      using std::conj;
      num += conj(x) * x;
      den += conj(x) * e;
    }
  Cplx<R> lambda = num / den;
  (void)fit;
  std::vector<Cplx<R>> out;
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= 10; ++m) {
      if ((n - m) % 2 == 0) continue;
      out.push_back(pc.r[n] * pf.r[m] / lambda);
      if (idx) idx->push_back({n, m});
    }
  return out;
}

Outcome a10_literal() {
  auto vals = a10_values<double>(nullptr);
  double worst = 0;
  size_t den_max = 0;
  for (auto z : vals) {
    // the value is sqrt(5) times a rational number, up to a power of i
    double x = (std::abs(z.real()) > std::abs(z.imag()) ? z.real() : z.imag()) / std::sqrt(5.0);
    auto s = oracle::snap(static_cast<long double>(x), mpz_class(1000000));
    worst = std::max(worst, s.residual);
    den_max = std::max(den_max, s.q.get_ui());
  }
  return {worst <= 1e-6, std::to_string(vals.size()) + " products, max residual " + fmt("%.2e", worst) +
                             ", max denominator " + std::to_string(den_max)};
}

}  // namespace

namespace {

Outcome a10_strict() {
  using B = BigReal;
  std::vector<std::pair<int, int>> idx;
  auto vals = a10_values<B>(&idx);
  B s5 = sqrt(B(5));
  double worst = 0;
  mpz_class den_max = 0;
  std::ostringstream shown;
  int printed = 0;
  for (size_t i = 0; i < vals.size(); ++i) {
    const auto& z = vals[i];
    B x = (abs(z.real()) > abs(z.imag()) ? z.real() : z.imag()) / s5;
    B other = abs(z.real()) > abs(z.imag()) ? z.imag() : z.real();
    auto s = oracle::snap<B>(x, mpz_class("1000000000000"), B("1e-30"));
    double rel = s.residual / std::max(1.0, std::abs(static_cast<double>(x)));
    worst = std::max({worst, rel, static_cast<double>(abs(other / s5)) / std::max(1.0, std::abs(static_cast<double>(x)))});
    if (s.q > den_max) den_max = s.q;
    if (printed < 3 && idx[i].first == 1 + printed * 4) {
      shown << " (n,m)=(" << idx[i].first << "," << idx[i].second << "):" << s.p.get_str() << "/" << s.q.get_str();
      ++printed;
    }
  }
  return {worst <= 1e-28, std::to_string(vals.size()) + " products, max relative residual " + fmt("%.2e", worst) +
                              ", max denominator " + den_max.get_str() + shown.str()};
}

void report(const char* id, const char* title, const std::function<Outcome()>& fn, bool& all) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%-4s %s  %s [%s] (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
  std::fflush(stdout);
  all = all && o.pass;
}

}  // namespace

int main() {
  bool all = true;
  report("A1", "level one Eisenstein identity", a1, all);
  report("A2", "rank-one extraction of Delta", a2, all);
  report("A3", "level five weight two identity", a3, all);
  report("A4", "level five weight four cusp form", a4, all);
  report("A5", "Laurent and Fourier jets agree", a5, all);
  report("A6", "transformation laws", a6, all);
  report("A7", "bracket and convolution routes agree", a7, all);
  report("A8", "L-values and Gauss sums", a8, all);
  report("A9", "period functional equations", a9, all);
  report("A10", "rationality snaps (denominator <= 1e6, residual <= 1e-6)", a10_literal, all);
  report("A10s", "rationality snaps, 128-bit (denominator <= 1e12, residual <= 1e-28)", a10_strict, all);
  return all ? 0 : 1;
}
