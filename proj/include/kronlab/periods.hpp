#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "kronlab/bigfloat.hpp"
#include "kronlab/dirichlet.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/modforms.hpp"
#include "kronlab/series.hpp"

namespace kronlab {

struct OmegaConstants {
  int k = 0;
  Rational omega_minus;                        // -(k-2)!/2
  std::optional<std::complex<double>> omega_plus;  // (2 pi i)^{1-k} zeta(k-1) omega^-, k > 2
};
OmegaConstants omega_constants(int k);

// Period polynomial of an Eisenstein series: omega^+ * even(X) + omega^- * odd(X).
struct EisensteinPeriod {
  int k = 0;
  long N = 1;
  LaurentPolyX<Cyclotomic> even;
  LaurentPolyX<Cyclotomic> odd;
};

// r_{G^eps_{k,N}}. With reduced = true the even part omits prod (1 + eps(p) p^{1-k/2}).
EisensteinPeriod period_eisenstein(int k, const SignCharacter& eps, bool reduced = false);
// r_{(G^eps_{k,N})_chi}; twisting kills the d > 1 terms, so eps only fixes the level.
EisensteinPeriod period_eisenstein_twisted(int k, const SignCharacter& eps, const DirichletCharacter& chi);

// R(X,Y) for G^eps_{k,N} twisted by chi; its multiplier in the C-side is R / (k-2)!.
ExactGrid eisenstein_R(int k, const SignCharacter& eps, const DirichletCharacter& chi);

template <class C>
C coef_from_rational(const Rational& r) {
  if constexpr (std::is_same_v<C, Cyclotomic>) {
    return C(r);
  } else if constexpr (std::is_same_v<C, BigComplex>) {
    return C(NumTraits<BigReal>::from_rational(r));
  } else {
    return C(r.get_d());
  }
}

// r_f(X) = sum (-1)^n C(k-2,n) r_n X^{k-2-n}, split by parity of the exponent.
template <class C>
std::pair<LaurentPolyX<C>, LaurentPolyX<C>> period_poly_parts(const std::vector<C>& r, int k) {
  LaurentPolyX<C> ev(-1, k - 1, C(0)), od(-1, k - 1, C(0));
  for (int n = 0; n <= k - 2; ++n) {
    Rational b(binomial(k - 2, n));
    if (n % 2) b = -b;
    int e = k - 2 - n;
    (e % 2 == 0 ? ev : od).at(e) = r[static_cast<size_t>(n)] * coef_from_rational<C>(b);
  }
  return {ev, od};
}

// C-hat(X,Y) = [ev_f(Y/N) od_fchi(X/N) + ev_fchi(Y/N) od_f(X/N)] * inv_denom,
// R-hat = (C-hat(X,Y) + (XY)^{k-2} C-hat(-1/X,-1/Y)) / 2, R = R-hat(X,Y) + R-hat(Y,X).
template <class C>
Grid<C> assemble_R_generic(const LaurentPolyX<C>& ev_f, const LaurentPolyX<C>& od_f, const LaurentPolyX<C>& ev_fchi,
                           const LaurentPolyX<C>& od_fchi, long N, int k, const C& inv_denom) {
  Grid<C> chat(-1, k - 1, C(0));
  auto accumulate = [&](const LaurentPolyX<C>& ev, const LaurentPolyX<C>& od) {
    for (int b = ev.lo; b <= ev.hi(); ++b) {
      if (is_zero_value(ev.at(b))) continue;
      for (int a = od.lo; a <= od.hi(); ++a) {
        if (is_zero_value(od.at(a))) continue;
        chat.at(a, b) += ev.at(b) * od.at(a) * coef_from_rational<C>(rpow(Rational(N), -(a + b)));
      }
    }
  };
  accumulate(ev_f, od_fchi);
  accumulate(ev_fchi, od_f);
  C half = coef_from_rational<C>(Rational(1, 2));
  Grid<C> rhat(-1, k - 1, C(0));
  for (int a = -1; a <= k - 1; ++a)
    for (int b = -1; b <= k - 1; ++b) {
      const C& c = chat.at(a, b);
      if (is_zero_value(c)) continue;
      C h = c * inv_denom * half;
      rhat.at(a, b) += h;
      if ((a + b) % 2 == 0)
        rhat.at(k - 2 - a, k - 2 - b) += h;
      else
        rhat.at(k - 2 - a, k - 2 - b) -= h;
    }
  Grid<C> R(-1, k - 1, C(0));
  for (int a = -1; a <= k - 1; ++a)
    for (int b = -1; b <= k - 1; ++b) {
      if (is_zero_value(rhat.at(a, b))) continue;
      R.at(a, b) += rhat.at(a, b);
      R.at(b, a) += rhat.at(a, b);
    }
  return R;
}

// R_{f_chi} from numeric periods of f and f_chi, divided by the given Petersson norm.
template <class R>
Grid<Cplx<R>> assemble_R(const std::vector<Cplx<R>>& r_f, const std::vector<Cplx<R>>& r_fchi,
                         const DirichletCharacter& chi, int k, const Cplx<R>& petersson);

struct PeterssonFit {
  std::complex<double> lambda;  // fitted <f,f>
  double max_rel_dev = 0;       // over monomials with nonzero exact coefficient
  double max_abs_stray = 0;     // largest fitted value where the exact coefficient is 0, relative
  int monomials = 0;
};

// Fits R_exact ~ R_numeric / lambda, where R_numeric already carries the 1/(k-2)! factor.
// Throws ConsistencyError if the deviation exceeds tol or lambda is not real positive.
PeterssonFit petersson_fit(const ExactGrid& R_exact, const Grid<std::complex<double>>& R_numeric, double tol = 1e-6);
template <class R>
PeterssonFit petersson_fit_big(const ExactGrid& R_exact, const Grid<Cplx<R>>& R_numeric, double tol = 1e-6);

struct CuspContribution {
  QSeries f;
  Grid<std::complex<double>> multiplier;  // R_{f_chi} / ((k-2)! <f,f>)
};

struct CSlice {
  int k = 0;
  std::vector<SignCharacter> eps;
  std::vector<ExactGrid> eis_multipliers;  // R_eps / (k-2)!
  BiPoly eisenstein;                       // sum of multiplier * G^eps
  std::vector<CuspContribution> cusp;
};

CSlice generating_C(const DirichletCharacter& chi, int k, int P, std::vector<CuspContribution> cusp = {});

}  // namespace kronlab
