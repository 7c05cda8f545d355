#include "kronlab/numeric.hpp"

#include <cmath>

#include "kronlab/errors.hpp"

namespace kronlab {

namespace {

template <class R>
Cplx<R> cx(const R& re, const R& im = R(0)) {
  return Cplx<R>(re, im);
}

template <class R>
Cplx<R> cpow(Cplx<R> z, long e) {
  if (e < 0) return cx<R>(R(1)) / cpow<R>(z, -e);
  Cplx<R> out = cx<R>(R(1));
  while (e) {
    if (e & 1) out *= z;
    z *= z;
    e >>= 1;
  }
  return out;
}

template <class R>
Cplx<R> ipow_i(long e) {  // i^e
  switch (((e % 4) + 4) % 4) {
    case 0: return cx<R>(R(1));
    case 1: return cx<R>(R(0), R(1));
    case 2: return cx<R>(R(-1));
    default: return cx<R>(R(0), R(-1));
  }
}

template <class R>
R rpow_real(const R& x, const R& e) {
  using std::pow;
  return pow(x, e);
}

template <class R>
Cplx<R> qvar(const Cplx<R>& tau) {
  using std::exp;
  R two_pi = 2 * NumTraits<R>::pi();
  return exp(cx<R>(R(0), two_pi) * tau);
}

constexpr int kMaxFactors = 200000;

}  // namespace

IntMatrix atkin_lehner_matrix(long N, long M) {
  if (M <= 0 || N % M != 0 || gcd_l(M, N / M) != 1) throw ConfigError("W_M needs an exact divisor M of N");
  if (M == 1) return {};
  if (M == N) return {0, -1, N, 0};
  // M w - (N/M) y = 1
  long L = N / M;
  long w = 0;
  while ((M * w - 1) % L != 0) ++w;
  long y = (M * w - 1) / L;
  return {M, y, N, M * w};
}

template <class R>
Cplx<R> embed(const Cyclotomic& x) {
  using std::cos;
  using std::sin;
  Cplx<R> out = cx<R>(R(0));
  long m = x.order();
  R ang = 2 * NumTraits<R>::pi() / R(m);
  const auto& c = x.coeffs();
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    R a = ang * R(static_cast<long>(j));
    out += cx<R>(cos(a), sin(a)) * NumTraits<R>::from_rational(c[j]);
  }
  return out;
}

template <class R>
Cplx<R> theta(const Cplx<R>& tau, const Cplx<R>& u) {
  using std::abs;
  using std::exp;
  if (!(tau.imag() > 0)) throw ConfigError("tau must lie in the upper half-plane");
  Cplx<R> q = qvar<R>(tau);
  Cplx<R> xi = exp(u);
  Cplx<R> xinv = cx<R>(R(1)) / xi;
  R big = abs(xi) > abs(xinv) ? abs(xi) : abs(xinv);
  Cplx<R> p = exp(cx<R>(R(0), 2 * NumTraits<R>::pi() / 8) * tau) * (exp(u / R(2)) - exp(-u / R(2)));
  Cplx<R> qn = cx<R>(R(1));
  for (int n = 1; n < kMaxFactors; ++n) {
    qn *= q;
    p *= (cx<R>(R(1)) - qn) * (cx<R>(R(1)) - qn * xi) * (cx<R>(R(1)) - qn * xinv);
    if (abs(qn) * big < NumTraits<R>::epsilon()) return p;
  }
  throw ConvergenceError("theta product did not converge; Im(tau) too small");
}

template <class R>
Cplx<R> theta_prime0(const Cplx<R>& tau) {
  using std::abs;
  using std::exp;
  Cplx<R> q = qvar<R>(tau);
  Cplx<R> p = exp(cx<R>(R(0), 2 * NumTraits<R>::pi() / 8) * tau);
  Cplx<R> qn = cx<R>(R(1));
  for (int n = 1; n < kMaxFactors; ++n) {
    qn *= q;
    Cplx<R> f = cx<R>(R(1)) - qn;
    p *= f * f * f;
    if (abs(qn) < NumTraits<R>::epsilon()) return p;
  }
  throw ConvergenceError("theta'(0) product did not converge");
}

template <class R>
Cplx<R> eval_F(const Cplx<R>& tau, const Cplx<R>& u, const Cplx<R>& v, double margin) {
  using std::abs;
  Cplx<R> t0 = theta_prime0<R>(tau);
  Cplx<R> tu = theta<R>(tau, u);
  Cplx<R> tv = theta<R>(tau, v);
  R lim = abs(t0) * R(margin);
  if (abs(tu) < lim || abs(tv) < lim) throw PoleError("evaluation point too close to a pole");
  return t0 * theta<R>(tau, u + v) / (tu * tv);
}

template <class R>
Cplx<R> eval_F_chi(const Cplx<R>& tau, const Cplx<R>& u, const Cplx<R>& v, const DirichletCharacter& chi,
                   double margin) {
  long N = chi.modulus();
  auto cb = chi.conj();
  Cplx<R> sum = cx<R>(R(0));
  for (long h = 0; h < N; ++h) {
    Cyclotomic c = cb(h);
    if (c.is_zero()) continue;
    Cplx<R> shift = cx<R>(R(0), 2 * NumTraits<R>::pi() * R(h) / R(N));
    sum += embed<R>(c) * (eval_F<R>(tau, u + shift, v, margin) + eval_F<R>(tau, u, v + shift, margin));
  }
  return sum / (R(2) * embed<R>(gauss_sum(cb)));
}

namespace {

// Envelope A with |a_n| <= A n^w on the known range.
template <class R>
R envelope(const std::vector<Cplx<R>>& a, R w) {
  using std::abs;
  R A(0);
  for (size_t n = 1; n < a.size(); ++n) {
    R v = abs(a[n]) / rpow_real<R>(R(static_cast<long>(n)), w);
    if (v > A) A = v;
  }
  return A;
}

// sum_{m >= from} A m^w g(m) for decreasing g, summed until negligible.
template <class R, class G>
R tail_sum(const R& A, const R& w, long from, G g) {
  R total(0);
  if (A == 0) return total;
  for (long m = from; m < from + 100000; ++m) {
    R t = A * rpow_real<R>(R(m), w) * g(m);
    total += t;
    if (t <= total * NumTraits<R>::epsilon() || t == 0) return total;
  }
  throw ConvergenceError("tail bound did not converge");
}

template <class R>
std::vector<Cplx<R>> embed_all(const QSeries& f) {
  std::vector<Cplx<R>> a(static_cast<size_t>(f.prec()));
  for (int n = 0; n < f.prec(); ++n)
    if (!f[n].is_zero()) a[n] = embed<R>(f[n]);
    else a[n] = cx<R>(R(0));
  return a;
}

template <class R>
Approx<R> eval_coeffs(const std::vector<Cplx<R>>& a, const Cplx<R>& tau, int w) {
  using std::abs;
  using std::exp;
  if (!(tau.imag() > 0)) throw ConfigError("tau must lie in the upper half-plane");
  Cplx<R> q = qvar<R>(tau);
  Cplx<R> acc = cx<R>(R(0));
  for (size_t n = a.size(); n-- > 0;) acc = acc * q + a[n];
  R aq = abs(q);
  R W(w);
  R bound = tail_sum<R>(envelope<R>(a, W), W, static_cast<long>(a.size()),
                        [&](long m) { return rpow_real<R>(aq, R(m)); });
  return {acc, bound};
}

}  // namespace

template <class R>
Approx<R> eval_qseries(const QSeries& f, const Cplx<R>& tau, int w) {
  return eval_coeffs<R>(embed_all<R>(f), tau, w);
}

template <class R>
Approx<R> eval_slashed(const QSeries& f, int k, const IntMatrix& g, const Cplx<R>& tau, double tol) {
  using std::abs;
  using std::sqrt;
  long det = g.det();
  if (det <= 0) throw std::invalid_argument("slash matrix needs positive determinant");
  Cplx<R> j = R(g.c) * tau + R(g.d);
  Cplx<R> gt = (R(g.a) * tau + R(g.b)) / j;
  auto v = eval_qseries<R>(f, gt, k);
  if (v.bound > R(tol))
    throw PrecisionError("Im(g tau) too small for the available q-precision (tail bound " +
                         std::to_string(NumTraits<R>::to_double(v.bound)) + ")");
  R scale = rpow_real<R>(sqrt(R(det)), R(k));
  Cplx<R> jk = cpow<R>(j, -k);
  return {v.value * jk * scale, v.bound * abs(jk) * scale};
}

template <class R>
Cplx<R> eval_jet(const BiJet& J, const Cplx<R>& tau, const Cplx<R>& u, const Cplx<R>& v) {
  Cplx<R> out = embed<R>(J.polar_u) / u + embed<R>(J.polar_v) / v;
  for (int r = 0; r <= J.D; ++r)
    for (int s = 0; r + s <= J.D; ++s) {
      const auto& e = J.at(r, s);
      if (e.is_zero()) continue;
      out += eval_qseries<R>(e, tau, r + s + 2).value * cpow<R>(u, r) * cpow<R>(v, s);
    }
  return out;
}

template <class R>
R upper_gamma_int(int n, const R& x) {
  using std::exp;
  R term(1), sum(1);
  for (int j = 1; j <= n; ++j) {
    term *= x / R(j);
    sum += term;
  }
  R fact(1);
  for (int j = 2; j <= n; ++j) fact *= R(j);
  return fact * exp(-x) * sum;
}

namespace {

// sum_{m >= 1} a_m Gamma(n+1, 2 pi m t0) / (2 pi m)^{n+1}, with its tail bound.
template <class R>
std::pair<Cplx<R>, R> upper_piece(const std::vector<Cplx<R>>& a, const R& t0, int n, int k) {
  R two_pi = 2 * NumTraits<R>::pi();
  auto g = [&](long m) {
    R x = two_pi * R(m);
    return upper_gamma_int<R>(n, x * t0) / rpow_real<R>(x, R(n + 1));
  };
  Cplx<R> acc = cx<R>(R(0));
  for (size_t m = 1; m < a.size(); ++m)
    if (a[m] != cx<R>(R(0))) acc += a[m] * g(static_cast<long>(m));
  R w(k);
  R bound = tail_sum<R>(envelope<R>(a, w), w, static_cast<long>(a.size()), g);
  return {acc, bound};
}

template <class R>
std::vector<Cplx<R>> twist_coeffs(const std::vector<Cplx<R>>& a, const DirichletCharacter& chi) {
  std::vector<Cplx<R>> out(a.size(), cx<R>(R(0)));
  for (size_t m = 0; m < a.size(); ++m) {
    Cyclotomic c = chi(static_cast<long>(m));
    if (!c.is_zero()) out[m] = a[m] * embed<R>(c);
  }
  return out;
}

template <class R>
R rel_residual(const Cplx<R>& lhs, const Cplx<R>& rhs) {
  using std::abs;
  R d = abs(rhs);
  return abs(lhs - rhs) / (d > 0 ? d : R(1));
}

}  // namespace

template <class R>
PeriodList<R> cusp_periods(const QSeries& f, int k, long N, int eps, double tol) {
  using std::sqrt;
  if (f.prec() < 2 || !f[0].is_zero()) throw ConfigError("cusp periods need a cusp form");
  auto a = embed_all<R>(f);
  R sN = sqrt(R(N));
  R t0 = R(1) / sN;

  // W_N eigenrelation at a test point
  Cplx<R> tau = cx<R>(R(1) / R(20), R(11) / (R(10) * sN));
  Cplx<R> wt = cx<R>(R(-1)) / (R(N) * tau);
  auto fw = eval_coeffs<R>(a, wt, k);
  auto ft = eval_coeffs<R>(a, tau, k);
  Cplx<R> lhs = fw.value * rpow_real<R>(sN, R(k)) * cpow<R>(R(N) * tau, -k);
  PeriodList<R> out;
  out.eigen_residual = rel_residual<R>(lhs, ft.value * R(eps));
  if (out.eigen_residual > R(tol))
    throw ConsistencyError("form is not an Atkin-Lehner eigenform with the given sign (residual " +
                           std::to_string(NumTraits<R>::to_double(out.eigen_residual)) + ")");

  out.bound = R(0);
  for (int n = 0; n <= k - 2; ++n) {
    auto [u1, b1] = upper_piece<R>(a, t0, n, k);
    auto [u2, b2] = upper_piece<R>(a, t0, k - 2 - n, k);
    R c = rpow_real<R>(R(N), R(k) / 2 - R(n) - 1);
    out.r.push_back(ipow_i<R>(n + 1) * (u1 + R(eps) * ipow_i<R>(k) * c * u2));
    R b = b1 + c * b2;
    if (b > out.bound) out.bound = b;
  }
  return out;
}

template <class R>
Cplx<R> cusp_period(const QSeries& f, int k, long N, int eps, int n) {
  if (n < 0 || n > k - 2) throw std::invalid_argument("period index out of range");
  return cusp_periods<R>(f, k, N, eps).r.at(static_cast<size_t>(n));
}

template <class R>
PeriodList<R> twisted_cusp_periods(const QSeries& f, int k, const DirichletCharacter& chi, double tol) {
  if (f.prec() < 2 || !f[0].is_zero()) throw ConfigError("cusp periods need a cusp form");
  long N = chi.modulus();
  auto cb = chi.conj();
  auto a = embed_all<R>(f);
  auto ac = twist_coeffs<R>(a, chi);
  auto acb = twist_coeffs<R>(a, cb);
  Cplx<R> lambda = embed<R>(chi(-1) * gauss_sum(chi) / gauss_sum(cb));
  R t0 = R(1) / R(N);
  R N2(N * N);

  Cplx<R> tau = cx<R>(R(1) / R(100), R(11) / (R(10) * R(N)));
  Cplx<R> wt = cx<R>(R(-1)) / (N2 * tau);
  auto fw = eval_coeffs<R>(ac, wt, k);
  auto ft = eval_coeffs<R>(acb, tau, k);
  Cplx<R> lhs = fw.value * rpow_real<R>(R(N), R(k)) * cpow<R>(N2 * tau, -k);
  PeriodList<R> out;
  out.eigen_residual = rel_residual<R>(lhs, lambda * ft.value);
  if (out.eigen_residual > R(tol))
    throw ConsistencyError("twisted eigenrelation fails (residual " +
                           std::to_string(NumTraits<R>::to_double(out.eigen_residual)) + ")");

  out.bound = R(0);
  for (int n = 0; n <= k - 2; ++n) {
    auto [u1, b1] = upper_piece<R>(ac, t0, n, k);
    auto [u2, b2] = upper_piece<R>(acb, t0, k - 2 - n, k);
    R c = rpow_real<R>(R(N), R(k - 2 * n - 2));
    out.r.push_back(ipow_i<R>(n + 1) * (u1 + lambda * ipow_i<R>(k) * c * u2));
    R b = b1 + c * b2;
    if (b > out.bound) out.bound = b;
  }
  return out;
}

template <class R>
Cplx<R> twisted_cusp_period(const QSeries& f, int k, const DirichletCharacter& chi, int n) {
  if (n < 0 || n > k - 2) throw std::invalid_argument("period index out of range");
  return twisted_cusp_periods<R>(f, k, chi).r.at(static_cast<size_t>(n));
}

#define KRONLAB_INSTANTIATE(R)                                                                                  \
  template Cplx<R> embed<R>(const Cyclotomic&);                                                                 \
  template Cplx<R> theta<R>(const Cplx<R>&, const Cplx<R>&);                                                    \
  template Cplx<R> theta_prime0<R>(const Cplx<R>&);                                                             \
  template Cplx<R> eval_F<R>(const Cplx<R>&, const Cplx<R>&, const Cplx<R>&, double);                           \
  template Cplx<R> eval_F_chi<R>(const Cplx<R>&, const Cplx<R>&, const Cplx<R>&, const DirichletCharacter&,     \
                                 double);                                                                       \
  template Approx<R> eval_qseries<R>(const QSeries&, const Cplx<R>&, int);                                      \
  template Approx<R> eval_slashed<R>(const QSeries&, int, const IntMatrix&, const Cplx<R>&, double);            \
  template Cplx<R> eval_jet<R>(const BiJet&, const Cplx<R>&, const Cplx<R>&, const Cplx<R>&);                   \
  template PeriodList<R> cusp_periods<R>(const QSeries&, int, long, int, double);                               \
  template Cplx<R> cusp_period<R>(const QSeries&, int, long, int, int);                                         \
  template PeriodList<R> twisted_cusp_periods<R>(const QSeries&, int, const DirichletCharacter&, double);        \
  template Cplx<R> twisted_cusp_period<R>(const QSeries&, int, const DirichletCharacter&, int);                 \
  template R upper_gamma_int<R>(int, const R&);

KRONLAB_INSTANTIATE(double)
KRONLAB_INSTANTIATE(BigReal)

}  // namespace kronlab
