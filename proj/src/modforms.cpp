#include "kronlab/modforms.hpp"

#include <sstream>

#include "kronlab/bernoulli.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/linalg.hpp"
#include "kronlab/ntheory.hpp"

namespace kronlab {

int SignCharacter::operator()(long M) const {
  if (N % M != 0) throw std::invalid_argument("sign character evaluated off the divisors of N");
  int s = 1;
  for (long p : prime_factors(M)) s *= sign.at(p);
  return s;
}

bool SignCharacter::is_trivial() const {
  for (auto& [p, s] : sign)
    if (s != 1) return false;
  return true;
}

std::string SignCharacter::label() const {
  if (sign.empty()) return "+";
  std::ostringstream os;
  bool first = true;
  for (auto& [p, s] : sign) {
    if (!first) os << ",";
    os << p << ":" << (s > 0 ? "+" : "-");
    first = false;
  }
  return os.str();
}

std::vector<SignCharacter> SignCharacter::all(long N) {
  if (!is_squarefree(N)) throw ConfigError("sign characters need a square-free level");
  auto ps = prime_factors(N);
  std::vector<SignCharacter> out;
  for (unsigned mask = 0; mask < (1u << ps.size()); ++mask) {
    SignCharacter e;
    e.N = N;
    for (size_t i = 0; i < ps.size(); ++i) e.sign[ps[i]] = (mask >> i) & 1u ? -1 : 1;
    out.push_back(e);
  }
  return out;
}

SignCharacter SignCharacter::from_signs(long N, const std::map<long, int>& s) {
  SignCharacter e;
  e.N = N;
  for (long p : prime_factors(N)) {
    auto it = s.find(p);
    int v = it == s.end() ? 1 : it->second;
    if (v != 1 && v != -1) throw ConfigError("signs must be +1 or -1");
    e.sign[p] = v;
  }
  return e;
}

EisensteinForm eisenstein_g(int k, int P) {
  if (k < 2 || k % 2) throw std::invalid_argument("G_k needs even k >= 2");
  std::vector<Integer> c(static_cast<size_t>(P), 0);
  for (long d = 1; d < P; ++d) {
    Integer dk = ipow(d, static_cast<unsigned>(k - 1));
    for (long n = d; n < P; n += d) c[n] += dk;
  }
  QSeries s(P);
  if (P > 0) s.mut(0) = Cyclotomic(-bernoulli_number(static_cast<unsigned>(k)) / Rational(2 * k));
  for (int n = 1; n < P; ++n) s.mut(n) = Cyclotomic(Rational(c[n]));
  s.weight = k;
  return {EisKind::G, k, 1, s, true, std::nullopt};
}

namespace {
bool parity_ok(int k, const DirichletCharacter& chi) { return chi.is_even() == (k % 2 == 0); }
}  // namespace

EisensteinForm eisenstein_g_chi(int k, const DirichletCharacter& chi, int P) {
  EisensteinForm f{EisKind::GChi, k, chi.modulus(), QSeries(P), parity_ok(k, chi), std::nullopt};
  f.series.weight = k;
  if (!f.parity_ok) return f;
  auto cb = chi.conj();
  if (P > 0) {
    Cyclotomic c0 = twisted_bernoulli(static_cast<unsigned>(k), cb);
    c0 *= Rational(-1, 2 * k);
    f.series.mut(0) = c0;
  }
  for (long d = 1; d < P; ++d) {
    if (cb.exponent(d) < 0) continue;
    Cyclotomic v = cb(d);
    v *= Rational(ipow(d, static_cast<unsigned>(k - 1)));
    for (long n = d; n < P; n += d) f.series.mut(static_cast<int>(n)) += v;
  }
  return f;
}

EisensteinForm eisenstein_h_chi(int k, const DirichletCharacter& chi, int P) {
  EisensteinForm f{EisKind::HChi, k, chi.modulus(), QSeries(P), parity_ok(k, chi), std::nullopt};
  f.series.weight = k;
  if (!f.parity_ok) return f;
  if (P > 0 && !chi(0).is_zero()) {
    Cyclotomic c0 = chi(0) * twisted_bernoulli(static_cast<unsigned>(k), chi);
    c0 *= Rational(-1, 2 * k);
    f.series.mut(0) = c0;
  }
  for (long m = 1; m < P; ++m) {
    if (chi.exponent(m) < 0) continue;
    Cyclotomic cm = chi(m);
    for (long d = 1; d * m < P; ++d) {
      Cyclotomic v = cm;
      v *= Rational(ipow(d, static_cast<unsigned>(k - 1)));
      f.series.mut(static_cast<int>(d * m)) += v;
    }
  }
  return f;
}

QSeries level_raise(const QSeries& f, int k, const SignCharacter& eps2) {
  if (k % 2) throw std::invalid_argument("level raising needs even weight");
  int P = f.prec();
  QSeries out(P);
  for (long d : divisors(eps2.N)) {
    Cyclotomic s(Rational(ipow(d, static_cast<unsigned>(k / 2))) * eps2(d));
    out = out + qs_scale(qs_rescale(f, static_cast<int>(d), P), s);
  }
  out.weight = f.weight;
  return out;
}

EisensteinForm eisenstein_level(int k, const SignCharacter& eps, int P) {
  auto g = eisenstein_g(k, P);
  EisensteinForm f{EisKind::GLevel, k, eps.N, level_raise(g.series, k, eps), true, eps};
  return f;
}

QSeries hecke_Tp(const QSeries& f, int k, long N, long p) {
  if (!is_prime(p)) throw std::invalid_argument("Hecke operator needs a prime");
  if (f.prec() < p) throw PrecisionError("insufficient precision for T_p");
  int P = static_cast<int>(f.prec() / p);
  QSeries out(P);
  Cyclotomic pk(Rational(ipow(p, static_cast<unsigned>(k - 1))));
  for (int n = 0; n < P; ++n) {
    Cyclotomic v = f[static_cast<int>(n * p)];
    if (N % p != 0 && n % p == 0) v += pk * f[static_cast<int>(n / p)];
    out.mut(n) = v;
  }
  out.weight = f.weight;
  return out;
}

Cyclotomic cusp_limit(CuspKind kind, int r, const DirichletCharacter& chi, long M) {
  long N = chi.modulus();
  if (M <= 0 || N % M != 0) throw std::invalid_argument("cusp index must divide the level");
  if (r % 2) throw std::invalid_argument("cusp limits are implemented for even weight");
  Cyclotomic b = twisted_bernoulli(static_cast<unsigned>(r), chi.conj());
  b *= Rational(-1, 2 * r);
  if (kind == CuspKind::G) return M == 1 ? b : Cyclotomic(0);
  if (M != N) return Cyclotomic(0);
  Cyclotomic w = gauss_sum(chi);
  w *= Rational(1) / Rational(ipow(N, static_cast<unsigned>(r / 2)));
  return w * b;
}

Cyclotomic eisenstein_level_cusp_value(int k, const SignCharacter& eps, long M) {
  Rational v = -bernoulli_number(static_cast<unsigned>(k)) / Rational(2 * k);
  for (long p : prime_factors(eps.N)) v *= Rational(1) + Rational(ipow(p, static_cast<unsigned>(k / 2))) * eps(p);
  return Cyclotomic(v * eps(M));
}

std::vector<Cyclotomic> LocalLFactor::expand(int n) const {
  std::vector<Cyclotomic> out(static_cast<size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    Cyclotomic acc = j < static_cast<int>(num.size()) ? num[j] : Cyclotomic(0);
    for (int i = 1; i <= j && i < static_cast<int>(den.size()); ++i) acc -= den[i] * out[j - i];
    out[j] = acc;  // den[0] = 1
  }
  return out;
}

namespace {
LocalLFactor two_factor(long ell, const Cyclotomic& a, const Cyclotomic& b) {
  // 1 / ((1 - aX)(1 - bX))
  LocalLFactor f;
  f.ell = ell;
  f.num = {Cyclotomic(1)};
  f.den = {Cyclotomic(1), -(a + b), a * b};
  return f;
}
Cyclotomic ellpow(long ell, int e) { return Cyclotomic(Rational(ipow(ell, static_cast<unsigned>(e)))); }
}  // namespace

LocalLFactor local_factor_g_chi(int k, const DirichletCharacter& chi, long ell) {
  return two_factor(ell, Cyclotomic(1), chi.conj()(ell) * ellpow(ell, k - 1));
}

LocalLFactor local_factor_h_chi(int k, const DirichletCharacter& chi, long ell) {
  return two_factor(ell, chi(ell), ellpow(ell, k - 1));
}

LocalLFactor local_factor_level(int k, const SignCharacter& eps, long ell) {
  auto f = two_factor(ell, Cyclotomic(1), ellpow(ell, k - 1));
  if (eps.N % ell == 0) f.num = {Cyclotomic(1), ellpow(ell, k / 2) * Cyclotomic(eps(ell))};
  return f;
}

LocalLFactor local_factor_hecke(int k, long N, const Cyclotomic& a_ell, long ell) {
  LocalLFactor f;
  f.ell = ell;
  f.num = {Cyclotomic(1)};
  if (N % ell == 0)
    f.den = {Cyclotomic(1), -a_ell};
  else
    f.den = {Cyclotomic(1), -a_ell, ellpow(ell, k - 1)};
  return f;
}

Cyclotomic petersson_ratio(const std::map<long, Cyclotomic>& a_f_at_p, int k, const SignCharacter& eps2) {
  Cyclotomic r(1);
  for (long p : prime_factors(eps2.N)) {
    auto it = a_f_at_p.find(p);
    if (it == a_f_at_p.end()) throw ConfigError("missing a_f(p) for p = " + std::to_string(p));
    Cyclotomic term = it->second;
    term *= rpow(Rational(p), 1 - k / 2) * eps2(p);
    term += Cyclotomic(p + 1);
    term *= Rational(2);
    r *= term;
  }
  return r;
}

namespace {
Rational selfnorm_product(int k, const SignCharacter& eps, bool with_second) {
  auto ps = prime_factors(eps.N);
  Rational r = rpow(Rational(2), static_cast<long>(ps.size()));
  for (long p : ps) {
    r *= Rational(1) + Rational(ipow(p, static_cast<unsigned>(k / 2))) * eps(p);
    if (with_second) r *= Rational(1) + rpow(Rational(p), 1 - k / 2) * eps(p);
  }
  return r;
}
Cyclotomic gk_selfnorm_coeff(int k) {
  // <G_k, G_k> = -(i^{k-1} / 2^{k-1}) (B_k / k) omega^+
  Cyclotomic c = Cyclotomic::zeta(4, k - 1);
  c *= -bernoulli_number(static_cast<unsigned>(k)) / Rational(k) / Rational(ipow(2, static_cast<unsigned>(k - 1)));
  return c;
}
}  // namespace

Rational eisenstein_selfnorm_ratio(int k, const SignCharacter& eps) {
  if (k == 2 && eps.is_trivial()) throw ConfigError("G_2 with trivial signs is not a modular form");
  return selfnorm_product(k, eps, true);
}

OmegaPlusMultiple eisenstein_selfnorm(int k, const SignCharacter& eps) {
  Cyclotomic c = gk_selfnorm_coeff(k);
  c *= eisenstein_selfnorm_ratio(k, eps);
  return {c};
}

OmegaPlusMultiple eisenstein_selfnorm_reduced(int k, const SignCharacter& eps) {
  Cyclotomic c = gk_selfnorm_coeff(k);
  c *= selfnorm_product(k, eps, false);
  return {c};
}

std::vector<long> atkin_lehner_cusps(long N) { return divisors(N); }

std::vector<EisBasisElement> eisenstein_basis(int k, long N, int P) {
  std::vector<EisBasisElement> out;
  auto cusps = atkin_lehner_cusps(N);
  for (const auto& eps : SignCharacter::all(N)) {
    if (k == 2 && eps.is_trivial()) continue;
    EisBasisElement e;
    e.label = "G" + std::to_string(k) + "^" + eps.label();
    e.eps = eps;
    e.series = eisenstein_level(k, eps, P).series;
    for (long M : cusps) e.cusp_values.push_back(eisenstein_level_cusp_value(k, eps, M));
    out.push_back(std::move(e));
  }
  return out;
}

RankOneResult extract_rank_one_cusp(const BiPoly& slice, const Grid<std::vector<Cyclotomic>>& slice_cusp_values,
                                    const std::vector<EisBasisElement>& basis) {
  RankOneResult res;
  int P = slice.cells.empty() ? 0 : slice.cells[0].prec();
  res.remainder = slice;
  for (size_t j = 0; j < basis.size(); ++j) res.multipliers.emplace_back(slice.lo, slice.hi, Cyclotomic(0));
  res.R = ExactGrid(slice.lo, slice.hi, Cyclotomic(0));
  size_t ncusps = basis.empty() ? 0 : basis[0].cusp_values.size();
  CMatrix A(ncusps, std::vector<Cyclotomic>(basis.size()));
  for (size_t m = 0; m < ncusps; ++m)
    for (size_t j = 0; j < basis.size(); ++j) A[m][j] = basis[j].cusp_values[m];

  std::vector<std::pair<int, int>> rows;
  for (int a = slice.lo; a <= slice.hi; ++a)
    for (int b = slice.lo; b <= slice.hi; ++b) {
      const auto& cv = slice_cusp_values.at(a, b);
      bool cv_zero = true;
      for (const auto& x : cv) cv_zero = cv_zero && x.is_zero();
      if (slice.at(a, b).is_zero() && cv_zero) continue;
      QSeries rem = slice.at(a, b);
      if (!basis.empty()) {
        auto sol = solve_exact(A, cv);
        if (!sol) {
          res.eisenstein_consistent = false;
        } else {
          for (size_t j = 0; j < basis.size(); ++j) {
            res.multipliers[j].at(a, b) = (*sol)[j];
            rem = rem - qs_scale(basis[j].series, (*sol)[j]);
          }
        }
      } else if (!cv_zero) {
        res.eisenstein_consistent = false;
      }
      res.remainder.at(a, b) = rem;
      if (!rem.is_zero()) rows.emplace_back(a, b);
    }

  CMatrix M;
  for (auto [a, b] : rows) M.push_back(res.remainder.at(a, b).coeffs());
  res.rank = matrix_rank(M);
  if (res.rank != 1) return res;

  const auto& first = res.remainder.at(rows[0].first, rows[0].second);
  if (P < 2 || first[1].is_zero()) throw ConsistencyError("rank-one remainder has vanishing q^1 coefficient");
  Cyclotomic inv = first[1].inverse();
  QSeries f = qs_scale(first, inv);
  for (auto [a, b] : rows) {
    const auto& row = res.remainder.at(a, b);
    Cyclotomic c = row[1];
    if (!(qs_scale(f, c) == row)) throw ConsistencyError("remainder rows are not proportional");
    res.R.at(a, b) = c;
  }
  res.eigenform = f;
  return res;
}

int atkin_lehner_sign(const QSeries& f, int k, long N) {
  Cyclotomic s(1);
  for (long p : prime_factors(N)) {
    Cyclotomic t = -f[static_cast<int>(p)];
    t *= rpow(Rational(p), 1 - k / 2);
    s *= t;
  }
  if (s == Cyclotomic(1)) return 1;
  if (s == Cyclotomic(-1)) return -1;
  throw ConsistencyError("form is not an Atkin-Lehner eigenform with sign +-1");
}

}  // namespace kronlab
