#pragma once

#include <vector>

#include "kronlab/bigfloat.hpp"
#include "kronlab/dirichlet.hpp"
#include "kronlab/series.hpp"

namespace kronlab {

// A numeric value with an estimated truncation bound.
template <class R>
struct Approx {
  Cplx<R> value;
  R bound;
};

struct IntMatrix {
  long a = 1, b = 0, c = 0, d = 1;
  long det() const { return a * d - b * c; }
};

// (M, y; N, M w) with determinant M, for M | N and gcd(M, N/M) = 1.
IntMatrix atkin_lehner_matrix(long N, long M);

// zeta_m -> exp(2 pi i / m)
template <class R>
Cplx<R> embed(const Cyclotomic& x);

// q^{1/8} (xi^{1/2} - xi^{-1/2}) prod (1 - q^n)(1 - q^n xi)(1 - q^n / xi), xi = e^u
template <class R>
Cplx<R> theta(const Cplx<R>& tau, const Cplx<R>& u);
template <class R>
Cplx<R> theta_prime0(const Cplx<R>& tau);

// theta'(0) theta(u+v) / (theta(u) theta(v)); PoleError when |theta(u)| or |theta(v)| < margin * |theta'(0)|
template <class R>
Cplx<R> eval_F(const Cplx<R>& tau, const Cplx<R>& u, const Cplx<R>& v, double margin = 1e-13);
// (1 / (2 W(chibar))) sum_h chibar(h) (F(u + 2 pi i h/N, v) + F(u, v + 2 pi i h/N))
template <class R>
Cplx<R> eval_F_chi(const Cplx<R>& tau, const Cplx<R>& u, const Cplx<R>& v, const DirichletCharacter& chi,
                   double margin = 1e-13);

// sum a_n q^n; the bound assumes |a_n| <= A n^w with A fitted on the known coefficients.
template <class R>
Approx<R> eval_qseries(const QSeries& f, const Cplx<R>& tau, int w);

// det^{k/2} (c tau + d)^{-k} f(g tau); throws PrecisionError when the tail bound exceeds tol.
template <class R>
Approx<R> eval_slashed(const QSeries& f, int k, const IntMatrix& g, const Cplx<R>& tau, double tol = 1e-10);

// Jet entries evaluated at tau, summed against u^r v^s, plus polar_u / u + polar_v / v.
template <class R>
Cplx<R> eval_jet(const BiJet& J, const Cplx<R>& tau, const Cplx<R>& u, const Cplx<R>& v);

template <class R>
struct PeriodList {
  std::vector<Cplx<R>> r;  // r_0 .. r_{k-2}
  R bound;
  R eigen_residual;  // relative residual of the Atkin-Lehner relation at a test point
};

// Periods of a cusp form f with f|W_N = eps f, split at 1/sqrt(N).
template <class R>
PeriodList<R> cusp_periods(const QSeries& f, int k, long N, int eps, double tol = 1e-8);
template <class R>
Cplx<R> cusp_period(const QSeries& f, int k, long N, int eps, int n);

// Periods of f_chi = sum chi(n) a(n) q^n, split at 1/N, using f_chi|W_{N^2} = chi(-1) W(chi)/W(chibar) f_chibar.
template <class R>
PeriodList<R> twisted_cusp_periods(const QSeries& f, int k, const DirichletCharacter& chi, double tol = 1e-8);
template <class R>
Cplx<R> twisted_cusp_period(const QSeries& f, int k, const DirichletCharacter& chi, int n);

// Gamma(n+1, x) for integer n >= 0
template <class R>
R upper_gamma_int(int n, const R& x);

}  // namespace kronlab
