#include "kronlab/kronecker.hpp"

#include <map>

#include "kronlab/bernoulli.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/ntheory.hpp"

namespace kronlab {

void require_even_primitive(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) throw ConfigError("character is not primitive");
  if (!chi.is_even()) throw ParityError("character is odd");
}

namespace {

Rational inv_fact(unsigned n) { return Rational(1) / Rational(factorial(n)); }

// G_{k,chibar} + H_{k,chi}, memoized per call site.
class EisSum {
 public:
  EisSum(const DirichletCharacter& chi, int P) : chi_(chi), P_(P) {}
  const QSeries& operator()(int k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    QSeries s = eisenstein_g_chi(k, chi_.conj(), P_).series + eisenstein_h_chi(k, chi_, P_).series;
    return cache_.emplace(k, std::move(s)).first->second;
  }

 private:
  DirichletCharacter chi_;
  int P_;
  std::map<int, QSeries> cache_;
};

}  // namespace

KroneckerJet kron_laurent(const DirichletCharacter& chi, int P, int D) {
  require_even_primitive(chi);
  BiJet J(D, P);
  EisSum E(chi, P);
  for (int r = 0; r <= D; ++r)
    for (int s = 0; r + s <= D; ++s) {
      if ((r + s) % 2 == 0) continue;
      int k = std::abs(r - s) + 1;
      Cyclotomic c(-inv_fact(r) * inv_fact(s));
      J.at(r, s) = qs_scale(theta_op(E(k), std::min(r, s)), c);
    }
  J.polar_u = chi(0);
  J.polar_v = chi(0);
  return {J, chi, JetRoute::Laurent};
}

KroneckerJet kron_fourier(const DirichletCharacter& chi, int P, int D) {
  require_even_primitive(chi);
  long N = chi.modulus();
  BiJet J(D, P);
  Cyclotomic c0 = chi(0);
  // q^0: (1/2) sum_{a=0}^{N} chi(a) xi^a / (xi^N - 1), and the same in eta.
  for (int r = 1; r <= D; r += 2) {
    Cyclotomic b = twisted_bernoulli(static_cast<unsigned>(r + 1), chi);
    Rational extra = Rational(ipow(N, static_cast<unsigned>(r))) * bernoulli_number(static_cast<unsigned>(r + 1));
    Cyclotomic v = b + c0 * Cyclotomic(extra);
    v *= Rational(1, 2) * inv_fact(static_cast<unsigned>(r + 1));
    if (P > 0) {
      J.at(r, 0).mut(0) = v;
      J.at(0, r).mut(0) = v;
    }
  }
  if (P > 0 && D >= 0) {
    // r = 0 coefficient: B_{1,chi} + chi(0)(B_1 + 1), halved, from each variable; vanishes for even chi
    Cyclotomic v = twisted_bernoulli(1, chi) + c0 * Cyclotomic(bernoulli_number(1) + Rational(1));
    if (!v.is_zero()) throw ConsistencyError("nonzero (0,0) constant term");
  }
  J.polar_u = c0;
  J.polar_v = c0;
  // q^n: -sum_{d | n} (chi(d) + chi(n/d)) (d u + (n/d) v)^j / j!, j odd
  for (int n = 1; n < P; ++n) {
    for (long d : divisors(n)) {
      long e = n / d;
      Cyclotomic w = chi(d) + chi(e);
      if (w.is_zero()) continue;
      for (int r = 0; r <= D; ++r)
        for (int s = (r % 2 == 0) ? 1 : 0; r + s <= D; s += 2) {
          Cyclotomic t = w;
          t *= -Rational(ipow(d, static_cast<unsigned>(r)) * ipow(e, static_cast<unsigned>(s))) * inv_fact(r) *
               inv_fact(s);
          J.at(r, s).mut(n) += t;
        }
    }
  }
  return {J, chi, JetRoute::Fourier};
}

QSeries rc_bracket(const QSeries& f, int k1, const QSeries& g, int k2, int m) {
  if (m < 0) throw std::invalid_argument("bracket index must be nonnegative");
  int P = std::min(f.prec(), g.prec());
  QSeries out(P);
  for (int m1 = 0; m1 <= m; ++m1) {
    int m2 = m - m1;
    Integer c = binomial(k1 + m - 1, m2) * binomial(k2 + m - 1, m1);
    if (m2 % 2) c = -c;
    out = out + qs_scale(theta_op(f, m1) * theta_op(g, m2), Cyclotomic(Rational(c)));
  }
  out.weight = k1 + k2 + 2 * m;
  return out;
}

QSeries rc_bracket_modified(const QSeries& f, int k1, const QSeries& g, int k2, int m, const Cyclotomic& scale) {
  QSeries out = rc_bracket(f, k1, g, k2, m);
  if (scale.is_zero()) return out;
  if (k2 == 2) {
    Cyclotomic c = scale;
    c *= Rational(1, m + k1);
    out = out + qs_scale(theta_op(f, m + 1), c);
  }
  if (k1 == 2) {
    Cyclotomic c = scale;
    c *= Rational(m % 2 ? -1 : 1, m + k2);
    out = out + qs_scale(theta_op(g, m + 1), c);
  }
  out.weight = k1 + k2 + 2 * m;
  return out;
}

QSeries g_single(int k, int m, const DirichletCharacter& chi, int P) {
  if (m < -1) return QSeries(P);
  if (m == -1) return k == 2 ? QSeries::constant(chi(0), P) : QSeries(P);
  QSeries E = eisenstein_g_chi(k, chi.conj(), P).series + eisenstein_h_chi(k, chi, P).series;
  Cyclotomic c(-inv_fact(m) * inv_fact(m + k - 1));
  return qs_scale(theta_op(E, m), c);
}

namespace {

QSeries convolution_route(int k1, int k2, int m, const DirichletCharacter& chi, int P) {
  QSeries out(P);
  auto cb = chi.conj();
  for (int m1 = -1; m1 <= m + 1; ++m1) {
    int m2 = m - m1;
    if (m2 < -1) continue;
    QSeries a = g_single(k1, m1, chi, P);
    if (a.is_zero()) continue;
    QSeries b = g_single(k2, m2, cb, P);
    if (b.is_zero()) continue;
    QSeries p = a * b;
    out = m2 % 2 == 0 ? out + p : out - p;
  }
  return out;
}

}  // namespace

GCoefficient g_coefficient(int k1, int k2, int m, const DirichletCharacter& chi, int P) {
  GCoefficient g;
  g.convolution = convolution_route(k1, k2, m, chi, P);
  if (m < 0) return g;
  QSeries E1 = eisenstein_g_chi(k1, chi.conj(), P).series + eisenstein_h_chi(k1, chi, P).series;
  QSeries E2 = eisenstein_g_chi(k2, chi, P).series + eisenstein_h_chi(k2, chi.conj(), P).series;
  Cyclotomic c(inv_fact(k1 + m - 1) * inv_fact(k2 + m - 1));
  g.bracket = qs_scale(rc_bracket_modified(E1, k1, E2, k2, m, chi(0)), c);
  if (!(g.bracket == g.convolution))
    throw ConsistencyError("bracket and convolution routes disagree at (k1,k2,m) = (" + std::to_string(k1) + "," +
                           std::to_string(k2) + "," + std::to_string(m) + ")");
  return g;
}

namespace {

// Adds g (X^{k1-1} + Y^{k1-1})(1 - (XY)^{k2-1})(XY)^m to grid.
void add_closed_term(BiPoly& grid, int k1, int k2, int m, const QSeries& g) {
  auto add = [&](int a, int b, bool neg) {
    grid.at(a, b) = neg ? grid.at(a, b) - g : grid.at(a, b) + g;
  };
  int e = k2 - 1;
  add(k1 - 1 + m, m, false);
  add(m, k1 - 1 + m, false);
  add(k1 - 1 + e + m, e + m, true);
  add(e + m, k1 - 1 + e + m, true);
}

BiPoly closed_slice(const DirichletCharacter& chi, int k, int lo, int hi, int P) {
  BiPoly grid(lo, hi, QSeries(P));
  for (int m = -2; 2 * m <= k - 4; ++m)
    for (int k1 = 2; k1 <= k - 2 - 2 * m; k1 += 2) {
      int k2 = k - k1 - 2 * m;
      if (k2 < 2) continue;
      QSeries g = m >= 0 ? g_coefficient(k1, k2, m, chi, P).bracket : convolution_route(k1, k2, m, chi, P);
      if (g.is_zero()) continue;
      add_closed_term(grid, k1, k2, m, g);
    }
  return grid;
}

}  // namespace

TriGen product_B(const DirichletCharacter& chi, int K, int P) {
  require_even_primitive(chi);
  TriGen out;
  out.K = K;
  out.prec = P;
  for (int k = 2; k <= K; k += 2) out.weights.emplace(k, closed_slice(chi, k, -1, k - 1, P));
  PrincipalPart pp{closed_slice(chi, 0, -2, 0, P), BiPoly(-2, 1, QSeries(P))};
  if (!bipoly_is_zero(pp.t_minus2)) out.principal = std::move(pp);
  return out;
}

BiPoly product_B_slice(const DirichletCharacter& chi, int k, int P) {
  require_even_primitive(chi);
  return closed_slice(chi, k, -1, k - 1, P);
}

TriGen product_B_raw(const DirichletCharacter& chi, int K, int P) {
  int D = std::max(K - 1, 1);
  auto A = bijet_substitute(kron_laurent(chi, P, D).jet, Substitution::XT_YT);
  auto B = bijet_substitute(kron_laurent(chi.conj(), P, D).jet, Substitution::T_mXYT);
  return trigen_mul(A, B, K);
}

BiJet kron_cusp_limit_jet(const DirichletCharacter& chi, long M, int D) {
  BiJet J(D, 1);
  for (int r = 1; r <= D; r += 2) {
    Cyclotomic v = cusp_limit(CuspKind::G, r + 1, chi.conj(), M) + cusp_limit(CuspKind::H, r + 1, chi, M);
    v *= -inv_fact(static_cast<unsigned>(r));
    J.at(r, 0).mut(0) = v;
    J.at(0, r).mut(0) = v;
  }
  J.polar_u = chi(0);
  J.polar_v = chi(0);
  return J;
}

Grid<std::vector<Cyclotomic>> product_B_cusp_values(const DirichletCharacter& chi, int k) {
  require_even_primitive(chi);
  auto cusps = atkin_lehner_cusps(chi.modulus());
  Grid<std::vector<Cyclotomic>> out(-1, k - 1, std::vector<Cyclotomic>(cusps.size()));
  int D = std::max(k - 1, 1);
  for (size_t i = 0; i < cusps.size(); ++i) {
    auto A = bijet_substitute(kron_cusp_limit_jet(chi, cusps[i], D), Substitution::XT_YT);
    auto B = bijet_substitute(kron_cusp_limit_jet(chi.conj(), cusps[i], D), Substitution::T_mXYT);
    auto S = trigen_mul(A, B, k).weights.at(k);
    for (int a = -1; a <= k - 1; ++a)
      for (int b = -1; b <= k - 1; ++b) out.at(a, b)[i] = S.at(a, b)[0];
  }
  return out;
}

}  // namespace kronlab
