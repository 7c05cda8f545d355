#include "kronlab/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kronlab/bernoulli.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/ntheory.hpp"

namespace kronlab {

DirichletCharacter::DirichletCharacter(long modulus, long order, std::vector<long> exps)
    : modulus_(modulus), order_(order), exps_(std::move(exps)) {
  values_.reserve(exps_.size());
  for (long e : exps_) values_.push_back(e < 0 ? Cyclotomic(0) : Cyclotomic::zeta(order_, e));
}

long DirichletCharacter::exponent(long n) const { return exps_[mod_pos(n, modulus_)]; }

Cyclotomic DirichletCharacter::operator()(long n) const { return values_[mod_pos(n, modulus_)]; }

bool DirichletCharacter::is_even() const { return exponent(-1) == 0; }

bool DirichletCharacter::trivial_mod(long d) const {
  // chi(x) = 1 for every unit x = 1 mod d
  for (long x = 1; x < modulus_; x += d)
    if (gcd_l(x, modulus_) == 1 && exps_[x] != 0) return false;
  return true;
}

bool DirichletCharacter::is_primitive() const {
  if (modulus_ == 1) return true;
  for (long p : prime_factors(modulus_))
    if (trivial_mod(modulus_ / p)) return false;
  return true;
}

long DirichletCharacter::conductor() const {
  for (long d : divisors(modulus_))
    if (trivial_mod(d)) return d;
  return modulus_;
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<long> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] < 0 ? -1 : mod_pos(-exps_[i], order_);
  return DirichletCharacter(modulus_, order_, std::move(e));
}

bool is_even(const DirichletCharacter& chi) { return chi.is_even(); }
bool is_primitive(const DirichletCharacter& chi) { return chi.is_primitive(); }

namespace {

long powmod(long b, long e, long m) {
  long r = 1 % m;
  b = mod_pos(b, m);
  while (e) {
    if (e & 1) r = static_cast<long>((__int128)r * b % m);
    b = static_cast<long>((__int128)b * b % m);
    e >>= 1;
  }
  return r;
}

long mult_order(long g, long m) {
  long o = 1, x = mod_pos(g, m);
  while (x != 1 % m) {
    x = x * g % m;
    ++o;
  }
  return o;
}

// CRT lift: x = r mod q, x = 1 mod N/q
long crt_lift(long r, long q, long N) {
  long other = N / q;
  for (long x = r; x < N; x += q)
    if (x % other == 1 % other) return x;
  return r;
}

struct Gen {
  long g;
  long n;
};

std::vector<Gen> unit_generators(long N) {
  std::vector<Gen> gens;
  long m = N;
  for (long p : prime_factors(N)) {
    long q = 1;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    if (p == 2) {
      if (q == 4) gens.push_back({crt_lift(3, q, N), 2});
      if (q >= 8) {
        gens.push_back({crt_lift(q - 1, q, N), 2});
        gens.push_back({crt_lift(5, q, N), q / 4});
      }
      continue;
    }
    long phi = q / p * (p - 1);
    for (long g = 2; g < q; ++g) {
      if (g % p == 0) continue;
      if (mult_order(g, q) == phi) {
        gens.push_back({crt_lift(g, q, N), phi});
        break;
      }
    }
  }
  return gens;
}

}  // namespace

DirichletCharacter trivial_character(long N) {
  std::vector<long> e(N);
  for (long a = 0; a < N; ++a) e[a] = gcd_l(a, N) == 1 ? 0 : -1;
  if (N == 1) e[0] = 0;
  return DirichletCharacter(N, 1, std::move(e));
}

std::vector<DirichletCharacter> enumerate_characters(long N) {
  if (N < 1) throw ConfigError("modulus must be positive");
  if (N == 1) return {trivial_character(1)};
  auto gens = unit_generators(N);
  long L = 1;
  for (auto& g : gens) L = lcm_l(L, g.n);
  // discrete logs of every unit
  std::vector<std::vector<long>> logs(N);
  std::vector<long> idx(gens.size(), 0);
  while (true) {
    long x = 1;
    for (size_t i = 0; i < gens.size(); ++i) x = static_cast<long>((__int128)x * powmod(gens[i].g, idx[i], N) % N);
    logs[x] = idx;
    size_t i = 0;
    while (i < gens.size() && ++idx[i] == gens[i].n) idx[i++] = 0;
    if (i == gens.size()) break;
  }
  std::vector<DirichletCharacter> out;
  std::vector<long> a(gens.size(), 0);
  while (true) {
    long ord = 1;
    for (size_t i = 0; i < gens.size(); ++i) ord = lcm_l(ord, gens[i].n / gcd_l(gens[i].n, a[i]));
    std::vector<long> exps(N, -1);
    for (long x = 1; x < N; ++x) {
      if (gcd_l(x, N) != 1) continue;
      long e = 0;
      for (size_t i = 0; i < gens.size(); ++i) e += a[i] * logs[x][i] * (L / gens[i].n);
      e = mod_pos(e, L);
      exps[x] = e / (L / ord);
    }
    out.emplace_back(N, ord, std::move(exps));
    size_t i = 0;
    while (i < gens.size() && ++a[i] == gens[i].n) a[i++] = 0;
    if (i == gens.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [N](const DirichletCharacter& x, const DirichletCharacter& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    for (long r = 1; r < N; ++r) {
      long ex = x.exponent(r), ey = y.exponent(r);
      if (ex < 0) continue;
      Rational fx(ex, x.order()), fy(ey, y.order());
      fx.canonicalize();
      fy.canonicalize();
      if (fx != fy) return fx < fy;
    }
    return false;
  });
  return out;
}

Cyclotomic gauss_sum(const DirichletCharacter& chi) {
  long N = chi.modulus();
  Cyclotomic s;
  for (long h = 0; h < N; ++h) {
    if (chi.exponent(h) < 0) continue;
    s += chi(h) * Cyclotomic::zeta(N, h);
  }
  return s;
}

Cyclotomic twisted_bernoulli(unsigned n, const DirichletCharacter& chi) {
  long N = chi.modulus();
  Cyclotomic s;
  for (long h = 0; h < N; ++h) {
    if (chi.exponent(h) < 0) continue;
    s += chi(h) * Cyclotomic(bernoulli_polynomial(n, Rational(h, N)));
  }
  s *= rpow(Rational(N), static_cast<long>(n) - 1);
  return s;
}

Cyclotomic twisted_bernoulli_genfun(unsigned n, const DirichletCharacter& chi) {
  long N = chi.modulus();
  // D(t) = (e^{Nt}-1)/t
  std::vector<Rational> D(n + 1);
  for (unsigned j = 0; j <= n; ++j) D[j] = Rational(ipow(N, j + 1), factorial(j + 1));
  Cyclotomic s;
  for (long a = 1; a <= N; ++a) {
    if (chi.exponent(a) < 0) continue;
    std::vector<Rational> num(n + 1), q(n + 1);
    for (unsigned j = 0; j <= n; ++j) num[j] = Rational(ipow(a, j), factorial(j));
    for (unsigned j = 0; j <= n; ++j) {
      Rational acc = num[j];
      for (unsigned i = 1; i <= j; ++i) acc -= D[i] * q[j - i];
      q[j] = acc / D[0];
    }
    s += chi(a) * Cyclotomic(q[n]);
  }
  s *= Rational(factorial(n));
  return s;
}

Cyclotomic l_value_negative(const DirichletCharacter& chi, unsigned k) {
  bool even_k = k % 2 == 0;
  if (chi.is_even() != even_k) throw ParityError("L(chi, 1-k) needs chi(-1) = (-1)^k");
  Cyclotomic b = twisted_bernoulli(k, chi);
  b *= Rational(-1, static_cast<long>(k));
  return b;
}

ComplexApprox hurwitz_zeta(ComplexApprox s_in, double a, double* bound) {
  if (std::abs(s_in - 1.0) < 1e-14) throw ConvergenceError("pole of the Hurwitz zeta function at s = 1");
  // Extended precision: for Re(s) < 0 the terms are much larger than the result.
  using LC = std::complex<long double>;
  const LC s(s_in.real(), s_in.imag());
  // M shifted terms, then Euler-Maclaurin with J Bernoulli corrections
  int M = s.real() > 1 ? 24 : 4;
  int J = 18;
  LC sum = 0;
  long double mass = 0;  // sum of term magnitudes, for the rounding estimate
  auto add = [&](const LC& t) {
    sum += t;
    mass += std::abs(t);
  };
  for (int n = 0; n < M; ++n) add(std::pow(LC(n + static_cast<long double>(a)), -s));
  LC x(M + static_cast<long double>(a));
  add(std::pow(x, 1.0L - s) / (s - 1.0L));
  add(0.5L * std::pow(x, -s));
  LC poch = s;  // (s)_{2j-1}
  long double last = 0;
  for (int j = 1; j <= J; ++j) {
    Rational br = bernoulli_number(2 * j) / Rational(factorial(2 * j));
    double hi = br.get_d();
    long double b = static_cast<long double>(hi) + static_cast<long double>(Rational(br - Rational(hi)).get_d());
    LC term = b * poch * std::pow(x, -s - (2.0L * j - 1.0L));
    add(term);
    last = std::abs(term);
    poch *= (s + (2.0L * j - 1.0L)) * (s + 2.0L * j);
    if (std::abs(poch) == 0) {
      last = 0;
      break;
    }
  }
  if (bound) *bound = static_cast<double>(2 * last + 1e-18L * mass) + 1e-16 * std::abs(ComplexApprox(sum));
  return ComplexApprox(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

LValue l_value_numeric(const DirichletCharacter& chi, ComplexApprox s, LMode mode) {
  if (mode == LMode::Direct && s.real() <= 1)
    throw ConvergenceError("direct summation needs Re(s) > 1");
  long N = chi.modulus();
  ComplexApprox total = 0;
  double bound = 0;
  for (long a = 1; a <= N; ++a) {
    if (chi.exponent(a) < 0) continue;
    double b = 0;
    ComplexApprox z = hurwitz_zeta(s, static_cast<double>(a) / N, &b);
    total += chi(a).embed_complex() * z;
    bound += b;
  }
  ComplexApprox scale = s.imag() == 0 ? ComplexApprox(std::pow(static_cast<double>(N), -s.real()))
                                      : std::pow(ComplexApprox(static_cast<double>(N)), -s);
  return {scale * total, bound * std::abs(scale)};
}

}  // namespace kronlab
