#include "kronlab/periods.hpp"

#include "kronlab/bernoulli.hpp"
#include "kronlab/numeric.hpp"
#include "kronlab/ntheory.hpp"

namespace kronlab {

OmegaConstants omega_constants(int k) {
  OmegaConstants w;
  w.k = k;
  w.omega_minus = -Rational(factorial(static_cast<unsigned>(k - 2))) / 2;
  if (k > 2) {
    auto z = l_value_numeric(trivial_character(1), ComplexApprox(k - 1, 0)).value;
    std::complex<double> tpi(0, 2 * NumTraits<double>::pi());
    w.omega_plus = std::pow(tpi, 1 - k) * z * w.omega_minus.get_d();
  }
  return w;
}

namespace {

Rational bfrac(unsigned r) { return bernoulli_number(r) / Rational(factorial(r)); }

// 2 (2i)^{k-3}
Cyclotomic two_2i_pow(int k) {
  Cyclotomic c = Cyclotomic::zeta(4, ((k - 3) % 4 + 4) % 4);
  c *= rpow(Rational(2), k - 2);
  return c;
}

}  // namespace

EisensteinPeriod period_eisenstein(int k, const SignCharacter& eps, bool reduced) {
  if (k < 2 || k % 2) throw std::invalid_argument("Eisenstein periods need even k >= 2");
  if (k == 2 && eps.is_trivial()) throw ConfigError("G_2 with trivial signs is excluded");
  long N = eps.N;
  EisensteinPeriod p{k, N, LaurentPolyX<Cyclotomic>(-1, k - 1, Cyclotomic(0)),
                     LaurentPolyX<Cyclotomic>(-1, k - 1, Cyclotomic(0))};
  Rational prod(1);
  if (!reduced)
    for (long q : prime_factors(N)) prod *= Rational(1) + rpow(Rational(q), 1 - k / 2) * eps(q);
  p.even.at(k - 2) = Cyclotomic(prod * rpow(Rational(N), k / 2 - 1) * eps(N));
  p.even.at(0) = Cyclotomic(-prod);
  for (long d : divisors(N)) {
    Rational c = rpow(Rational(d), 1 - k / 2) * eps(d);
    for (int r = 0; r <= k; r += 2) {
      Rational t = c * bfrac(r) * bfrac(k - r) * rpow(Rational(d), r - 1);
      p.odd.at(r - 1) += Cyclotomic(t);
    }
  }
  return p;
}

EisensteinPeriod period_eisenstein_twisted(int k, const SignCharacter& eps, const DirichletCharacter& chi) {
  long N = chi.modulus();
  if (eps.N != N) throw ConfigError("sign character and Dirichlet character have different levels");
  EisensteinPeriod p{k, N, LaurentPolyX<Cyclotomic>(-1, k - 1, Cyclotomic(0)),
                     LaurentPolyX<Cyclotomic>(-1, k - 1, Cyclotomic(0))};
  Cyclotomic c0 = chi(0);
  if (!c0.is_zero()) {
    p.even.at(k - 2) = c0;
    p.even.at(0) = -c0;
  }
  Cyclotomic w = gauss_sum(chi);
  w *= rpow(Rational(N), 1 - k);
  auto cb = chi.conj();
  for (int r = 0; r <= k; r += 2) {
    Cyclotomic t = twisted_bernoulli(static_cast<unsigned>(r), chi) *
                   twisted_bernoulli(static_cast<unsigned>(k - r), cb);
    t *= Rational(1) / Rational(factorial(r) * factorial(k - r)) * rpow(Rational(N), r - 1);
    p.odd.at(r - 1) += w * t;
  }
  return p;
}

ExactGrid eisenstein_R(int k, const SignCharacter& eps, const DirichletCharacter& chi) {
  long N = chi.modulus();
  auto pf = period_eisenstein(k, eps, true);
  auto pt = period_eisenstein_twisted(k, eps, chi);
  // even parts are omega^+ multiples, odd parts omega^- multiples; the selfnorm is an omega^+ multiple,
  // so the quotient is an omega^- multiple.
  Cyclotomic denom = gauss_sum(chi) * two_2i_pow(k) * eisenstein_selfnorm_reduced(k, eps).coeff;
  denom *= rpow(Rational(N), 1 - k);
  Cyclotomic inv = denom.inverse();
  inv *= omega_constants(k).omega_minus;
  return assemble_R_generic<Cyclotomic>(pf.even, pf.odd, pt.even, pt.odd, N, k, inv);
}

template <class R>
Grid<Cplx<R>> assemble_R(const std::vector<Cplx<R>>& r_f, const std::vector<Cplx<R>>& r_fchi,
                         const DirichletCharacter& chi, int k, const Cplx<R>& petersson) {
  if (static_cast<int>(r_f.size()) != k - 1 || static_cast<int>(r_fchi.size()) != k - 1)
    throw ConfigError("period lists must have k-1 entries");
  long N = chi.modulus();
  auto [ev_f, od_f] = period_poly_parts<Cplx<R>>(r_f, k);
  auto [ev_c, od_c] = period_poly_parts<Cplx<R>>(r_fchi, k);
  Cyclotomic d = gauss_sum(chi) * two_2i_pow(k);
  d *= rpow(Rational(N), 1 - k);
  Cplx<R> denom = embed<R>(d) * petersson;
  if (denom == Cplx<R>(0)) throw ConfigError("zero Petersson norm");
  Cplx<R> one(1);
  return assemble_R_generic<Cplx<R>>(ev_f, od_f, ev_c, od_c, N, k, one / denom);
}

template <class R>
PeterssonFit petersson_fit_big(const ExactGrid& R_exact, const Grid<Cplx<R>>& R_numeric, double tol) {
  using std::abs;
  using std::conj;
  if (R_exact.lo != R_numeric.lo || R_exact.hi != R_numeric.hi) throw ConfigError("grid shapes differ");
  Cplx<R> num(0);
  R den(0), maxex(0);
  std::vector<Cplx<R>> ex(R_exact.cells.size());
  for (size_t i = 0; i < ex.size(); ++i) {
    ex[i] = embed<R>(R_exact.cells[i]);
    num += conj(R_numeric.cells[i]) * ex[i];
    den += abs(R_numeric.cells[i]) * abs(R_numeric.cells[i]);
    if (abs(ex[i]) > maxex) maxex = abs(ex[i]);
  }
  if (den == 0 || num == Cplx<R>(0)) throw ConsistencyError("nothing to fit");
  Cplx<R> lambda = Cplx<R>(den) / num;
  PeterssonFit fit;
  fit.lambda = {NumTraits<R>::to_double(lambda.real()), NumTraits<R>::to_double(lambda.imag())};
  R dev(0), stray(0);
  for (size_t i = 0; i < ex.size(); ++i) {
    Cplx<R> v = R_numeric.cells[i] / lambda;
    if (R_exact.cells[i].is_zero()) {
      R s = abs(v) / maxex;
      if (s > stray) stray = s;
    } else {
      R e = abs(v - ex[i]) / abs(ex[i]);
      if (e > dev) dev = e;
      ++fit.monomials;
    }
  }
  fit.max_rel_dev = NumTraits<R>::to_double(dev);
  fit.max_abs_stray = NumTraits<R>::to_double(stray);
  if (fit.max_rel_dev > tol || fit.max_abs_stray > tol)
    throw ConsistencyError("Petersson fit deviation " + std::to_string(fit.max_rel_dev) + " exceeds tolerance");
  if (!(lambda.real() > 0) || abs(lambda.imag()) > R(tol) * abs(lambda))
    throw ConsistencyError("fitted Petersson norm is not real positive");
  return fit;
}

PeterssonFit petersson_fit(const ExactGrid& R_exact, const Grid<std::complex<double>>& R_numeric, double tol) {
  return petersson_fit_big<double>(R_exact, R_numeric, tol);
}

CSlice generating_C(const DirichletCharacter& chi, int k, int P, std::vector<CuspContribution> cusp) {
  long N = chi.modulus();
  CSlice c;
  c.k = k;
  c.eisenstein = BiPoly(-1, k - 1, QSeries(P));
  Rational inv_fact = Rational(1) / Rational(factorial(static_cast<unsigned>(k - 2)));
  for (const auto& b : eisenstein_basis(k, N, P)) {
    ExactGrid m = eisenstein_R(k, b.eps, chi);
    for (auto& x : m.cells) x *= inv_fact;
    for (int a = -1; a <= k - 1; ++a)
      for (int bb = -1; bb <= k - 1; ++bb)
        if (!m.at(a, bb).is_zero()) c.eisenstein.at(a, bb) = c.eisenstein.at(a, bb) + qs_scale(b.series, m.at(a, bb));
    c.eps.push_back(b.eps);
    c.eis_multipliers.push_back(std::move(m));
  }
  c.cusp = std::move(cusp);
  return c;
}

template Grid<Cplx<double>> assemble_R<double>(const std::vector<Cplx<double>>&, const std::vector<Cplx<double>>&,
                                               const DirichletCharacter&, int, const Cplx<double>&);
template Grid<Cplx<BigReal>> assemble_R<BigReal>(const std::vector<Cplx<BigReal>>&,
                                                 const std::vector<Cplx<BigReal>>&, const DirichletCharacter&, int,
                                                 const Cplx<BigReal>&);
template PeterssonFit petersson_fit_big<double>(const ExactGrid&, const Grid<Cplx<double>>&, double);
template PeterssonFit petersson_fit_big<BigReal>(const ExactGrid&, const Grid<Cplx<BigReal>>&, double);

}  // namespace kronlab
