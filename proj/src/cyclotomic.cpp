#include "kronlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace kronlab {

long gcd_l(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_l(long a, long b) { return a / gcd_l(a, b) * b; }

long euler_phi(long m) {
  long r = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

namespace {

struct CycloData {
  long m = 1;
  long phi = 1;
  std::vector<long> poly;
  // powtab[e] = x^e mod Phi_m, e = 0..m-1, as integer vectors of length phi
  std::vector<std::vector<long>> powtab;
};

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (long i = static_cast<long>(num.size()) - 1; i >= static_cast<long>(den.size()) - 1; --i) {
    long c = num[i];  // den is monic
    long qi = i - static_cast<long>(den.size()) + 1;
    q[qi] = c;
    for (size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
  }
  return q;
}

std::mutex g_mu;
std::map<long, std::shared_ptr<const CycloData>> g_cache;

std::shared_ptr<const CycloData> build(long m);

std::shared_ptr<const CycloData> data_for(long m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(g_mu);
    auto it = g_cache.find(m);
    if (it != g_cache.end()) return it->second;
  }
  auto d = build(m);
  std::lock_guard<std::mutex> lock(g_mu);
  return g_cache.emplace(m, d).first->second;
}

std::shared_ptr<const CycloData> build(long m) {
  auto d = std::make_shared<CycloData>();
  d->m = m;
  std::vector<long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (long e = 1; e < m; ++e)
    if (m % e == 0) p = poly_div_exact(p, data_for(e)->poly);
  d->poly = p;
  d->phi = static_cast<long>(p.size()) - 1;
  long phi = d->phi;
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  d->powtab.reserve(m);
  for (long e = 0; e < m; ++e) {
    d->powtab.push_back(cur);
    // multiply by x and reduce
    long top = cur[phi - 1];
    for (long j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (long j = 0; j < phi; ++j) cur[j] -= top * d->poly[j];
  }
  return d;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long m) { return data_for(m)->poly; }

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rational(0)} {}
Cyclotomic::Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}
Cyclotomic::Cyclotomic(long n) : order_(1), coeffs_{Rational(n)} {}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> coeffs) : order_(order) {
  auto d = data_for(order);
  if (static_cast<long>(coeffs.size()) > d->phi) {
    // reduce an over-long representative
    std::vector<Rational> red(d->phi, Rational(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      const auto& row = d->powtab[i % order];
      for (long j = 0; j < d->phi; ++j)
        if (row[j]) red[j] += coeffs[i] * row[j];
    }
    coeffs_ = std::move(red);
  } else {
    coeffs.resize(d->phi, Rational(0));
    coeffs_ = std::move(coeffs);
  }
}

Cyclotomic Cyclotomic::zeta(long m, long j) {
  auto d = data_for(m);
  long e = ((j % m) + m) % m;
  std::vector<Rational> c(d->phi);
  for (long i = 0; i < d->phi; ++i) c[i] = d->powtab[e][i];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::lift(long m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw std::invalid_argument("lift target is not a multiple of the order");
  auto d = data_for(m);
  long step = m / order_;
  std::vector<Rational> c(d->phi, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = d->powtab[(static_cast<long>(i) * step) % m];
    for (long j = 0; j < d->phi; ++j)
      if (row[j]) c[j] += coeffs_[i] * row[j];
  }
  Cyclotomic out;
  out.order_ = m;
  out.coeffs_ = std::move(c);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
  auto d = data_for(order_);
  std::vector<Rational> c(d->phi, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = d->powtab[(order_ - static_cast<long>(i)) % order_];
    for (long j = 0; j < d->phi; ++j)
      if (row[j]) c[j] += coeffs_[i] * row[j];
  }
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ == order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  long m = lcm_l(order_, o.order_);
  Cyclotomic b = o.lift(m);
  *this = lift(m);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == 1) {
    Cyclotomic r = b;
    r *= a.coeffs_[0];
    return r;
  }
  if (b.order_ == 1) {
    Cyclotomic r = a;
    r *= b.coeffs_[0];
    return r;
  }
  if (a.order_ != b.order_) {
    long m = lcm_l(a.order_, b.order_);
    return a.lift(m) * b.lift(m);
  }
  auto d = data_for(a.order_);
  long phi = d->phi;
  std::vector<Rational> full(2 * phi - 1, Rational(0));
  for (long i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (long j = 0; j < phi; ++j)
      if (b.coeffs_[j] != 0) full[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  std::vector<Rational> c(full.begin(), full.begin() + phi);
  for (long e = phi; e < 2 * phi - 1; ++e) {
    if (full[e] == 0) continue;
    const auto& row = d->powtab[e % a.order_];
    for (long j = 0; j < phi; ++j)
      if (row[j]) c[j] += full[e] * row[j];
  }
  Cyclotomic out;
  out.order_ = a.order_;
  out.coeffs_ = std::move(c);
  return out;
}

Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  long m = lcm_l(a.order_, b.order_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
  if (order_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Solve (multiplication-by-this) x = e_0 by Gaussian elimination over Q.
  auto d = data_for(order_);
  long phi = d->phi;
  std::vector<std::vector<Rational>> M(phi, std::vector<Rational>(phi + 1, Rational(0)));
  for (long j = 0; j < phi; ++j) {
    Cyclotomic col = *this * Cyclotomic::zeta(order_, j);
    for (long i = 0; i < phi; ++i) M[i][j] = col.coeffs_[i];
  }
  M[0][phi] = 1;
  for (long c = 0; c < phi; ++c) {
    long piv = c;
    while (piv < phi && M[piv][c] == 0) ++piv;
    if (piv == phi) throw std::domain_error("singular multiplication matrix");
    std::swap(M[piv], M[c]);
    Rational inv = Rational(1) / M[c][c];
    for (long j = c; j <= phi; ++j) M[c][j] *= inv;
    for (long r = 0; r < phi; ++r) {
      if (r == c || M[r][c] == 0) continue;
      Rational f = M[r][c];
      for (long j = c; j <= phi; ++j) M[r][j] -= f * M[c][j];
    }
  }
  std::vector<Rational> x(phi);
  for (long i = 0; i < phi; ++i) x[i] = M[i][phi];
  return Cyclotomic(order_, std::move(x));
}

ComplexApprox Cyclotomic::embed_complex() const {
  double s = 0, t = 0;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    double c = coeffs_[j].get_d();
    double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
    s += c * std::cos(ang);
    t += c * std::sin(ang);
  }
  return {s, t};
}

ComplexApprox embed_complex(const Cyclotomic& a) { return a.embed_complex(); }

}  // namespace kronlab
