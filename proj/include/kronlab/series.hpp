#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronlab/cyclotomic.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/rational.hpp"

namespace kronlab {

// Coefficient-ring helpers shared by the exact and the complex instantiations.
inline bool is_zero_value(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero_value(const Rational& x) { return x == 0; }
template <class R>
bool is_zero_value(const std::complex<R>& x) {
  return x.real() == 0 && x.imag() == 0;
}

template <class T>
T ring_from_integer(const Integer& n) {
  if constexpr (std::is_same_v<T, Cyclotomic> || std::is_same_v<T, Rational>) {
    return T(Rational(n));
  } else {
    return T(n.get_d());
  }
}

template <class T>
T ring_from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, Cyclotomic> || std::is_same_v<T, Rational>) {
    return T(r);
  } else {
    return T(r.get_d());
  }
}

// q-expansion known modulo q^prec.
template <class T>
class QSeriesT {
 public:
  QSeriesT() : prec_(0) {}
  explicit QSeriesT(int prec) : prec_(prec), c_(static_cast<size_t>(prec), T(0)) {}
  explicit QSeriesT(std::vector<T> c) : prec_(static_cast<int>(c.size())), c_(std::move(c)) {}

  static QSeriesT constant(const T& a, int prec) {
    QSeriesT s(prec);
    if (prec > 0) s.c_[0] = a;
    return s;
  }

  int prec() const { return prec_; }
  const std::vector<T>& coeffs() const { return c_; }

  const T& operator[](int n) const {
    if (n < 0 || n >= prec_)
      throw PrecisionError("coefficient q^" + std::to_string(n) + " beyond precision " + std::to_string(prec_));
    return c_[static_cast<size_t>(n)];
  }
  T& mut(int n) {
    if (n < 0 || n >= prec_)
      throw PrecisionError("coefficient q^" + std::to_string(n) + " beyond precision " + std::to_string(prec_));
    return c_[static_cast<size_t>(n)];
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!is_zero_value(x)) return false;
    return true;
  }

  QSeriesT truncate(int p) const {
    if (p > prec_) throw PrecisionError("cannot extend a series beyond its precision");
    return QSeriesT(std::vector<T>(c_.begin(), c_.begin() + p));
  }

  std::optional<int> weight;

 private:
  int prec_;
  std::vector<T> c_;
};

template <class T>
bool operator==(const QSeriesT<T>& a, const QSeriesT<T>& b) {
  return a.prec() == b.prec() && a.coeffs() == b.coeffs();
}

// Equality of the common known part.
template <class T>
bool agree_to(const QSeriesT<T>& a, const QSeriesT<T>& b, int p) {
  if (p > a.prec() || p > b.prec()) throw PrecisionError("comparison beyond precision");
  for (int n = 0; n < p; ++n)
    if (!(a[n] == b[n])) return false;
  return true;
}

template <class T>
QSeriesT<T> qs_add(const QSeriesT<T>& a, const QSeriesT<T>& b) {
  int p = std::min(a.prec(), b.prec());
  QSeriesT<T> r(p);
  for (int n = 0; n < p; ++n) r.mut(n) = a[n] + b[n];
  return r;
}

template <class T>
QSeriesT<T> qs_sub(const QSeriesT<T>& a, const QSeriesT<T>& b) {
  int p = std::min(a.prec(), b.prec());
  QSeriesT<T> r(p);
  for (int n = 0; n < p; ++n) r.mut(n) = a[n] - b[n];
  return r;
}

template <class T>
QSeriesT<T> qs_scale(const QSeriesT<T>& a, const T& s) {
  QSeriesT<T> r(a.prec());
  if (is_zero_value(s)) return r;
  for (int n = 0; n < a.prec(); ++n)
    if (!is_zero_value(a[n])) r.mut(n) = a[n] * s;
  return r;
}

template <class T>
QSeriesT<T> qs_mul(const QSeriesT<T>& a, const QSeriesT<T>& b) {
  int p = std::min(a.prec(), b.prec());
  QSeriesT<T> r(p);
  for (int i = 0; i < p; ++i) {
    if (is_zero_value(a[i])) continue;
    for (int j = 0; i + j < p; ++j) {
      if (is_zero_value(b[j])) continue;
      r.mut(i + j) += a[i] * b[j];
    }
  }
  return r;
}

template <class T>
QSeriesT<T> operator+(const QSeriesT<T>& a, const QSeriesT<T>& b) {
  return qs_add(a, b);
}
template <class T>
QSeriesT<T> operator-(const QSeriesT<T>& a, const QSeriesT<T>& b) {
  return qs_sub(a, b);
}
template <class T>
QSeriesT<T> operator*(const QSeriesT<T>& a, const QSeriesT<T>& b) {
  return qs_mul(a, b);
}
template <class T>
QSeriesT<T> operator-(const QSeriesT<T>& a) {
  QSeriesT<T> r(a.prec());
  for (int n = 0; n < a.prec(); ++n) r.mut(n) = -a[n];
  return r;
}

// (q d/dq)^m
template <class T>
QSeriesT<T> theta_op(const QSeriesT<T>& f, int m) {
  QSeriesT<T> r(f.prec());
  for (int n = 1; n < f.prec(); ++n)
    if (!is_zero_value(f[n])) r.mut(n) = f[n] * ring_from_integer<T>(ipow(n, static_cast<unsigned>(m)));
  if (m == 0 && f.prec() > 0) r.mut(0) = f[0];
  if (f.weight) r.weight = *f.weight + 2 * m;
  return r;
}

// f(q^d). A series known mod q^P gives f(q^d) mod q^(dP); out_prec caps the result.
template <class T>
QSeriesT<T> qs_rescale(const QSeriesT<T>& f, int d, std::optional<int> out_prec = std::nullopt) {
  if (d < 1) throw std::invalid_argument("rescale factor must be positive");
  int p = d * f.prec();
  if (out_prec) {
    if (*out_prec > p) throw PrecisionError("rescaled series requested beyond available precision");
    p = *out_prec;
  }
  QSeriesT<T> r(p);
  for (int n = 0; n * d < p; ++n) r.mut(n * d) = f[n];
  r.weight = f.weight;
  return r;
}

template <class T>
QSeriesT<T> embed_series(const QSeriesT<Cyclotomic>& f) {
  QSeriesT<T> r(f.prec());
  for (int n = 0; n < f.prec(); ++n) {
    auto z = f[n].embed_complex();
    r.mut(n) = T(z);
  }
  return r;
}

// Jet in (u,v) of total degree <= D with q-series entries plus 1/u and 1/v slots.
template <class T>
struct BiJetT {
  int D = 0;
  int prec = 0;
  std::vector<QSeriesT<T>> entries;
  T polar_u = T(0);
  T polar_v = T(0);

  BiJetT() = default;
  BiJetT(int deg, int p) : D(deg), prec(p), entries(static_cast<size_t>((deg + 1) * (deg + 2) / 2), QSeriesT<T>(p)) {}

  static size_t index(int r, int s) { return static_cast<size_t>((r + s) * (r + s + 1) / 2 + s); }
  const QSeriesT<T>& at(int r, int s) const {
    if (r < 0 || s < 0 || r + s > D) throw PrecisionError("jet entry beyond degree");
    return entries[index(r, s)];
  }
  QSeriesT<T>& at(int r, int s) {
    if (r < 0 || s < 0 || r + s > D) throw PrecisionError("jet entry beyond degree");
    return entries[index(r, s)];
  }
};

// Dense bivariate Laurent polynomial; both exponents range over [lo, hi].
template <class C>
struct Grid {
  int lo = 0;
  int hi = -1;
  std::vector<C> cells;

  Grid() = default;
  Grid(int l, int h, const C& zero) : lo(l), hi(h), cells(static_cast<size_t>((h - l + 1) * (h - l + 1)), zero) {}

  int width() const { return hi - lo + 1; }
  bool contains(int a, int b) const { return a >= lo && a <= hi && b >= lo && b <= hi; }
  const C& at(int a, int b) const {
    if (!contains(a, b)) throw std::out_of_range("monomial outside grid");
    return cells[static_cast<size_t>((a - lo) * width() + (b - lo))];
  }
  C& at(int a, int b) {
    if (!contains(a, b)) throw std::out_of_range("monomial outside grid");
    return cells[static_cast<size_t>((a - lo) * width() + (b - lo))];
  }
};

template <class C>
bool operator==(const Grid<C>& a, const Grid<C>& b) {
  return a.lo == b.lo && a.hi == b.hi && a.cells == b.cells;
}

template <class T>
using BiPolyT = Grid<QSeriesT<T>>;

enum class Substitution { XT_YT, T_mXYT };

// Result of substituting a jet: T-power t (from -1 to D) -> bivariate Laurent polynomial.
template <class T>
struct SubstJetT {
  int D = 0;
  int prec = 0;
  std::map<int, BiPolyT<T>> by_t;
};

template <class T>
struct PrincipalPartT {
  BiPolyT<T> t_minus2;  // coefficient of T^-2
  BiPolyT<T> t_minus1;  // coefficient of T^-1
};

template <class T>
struct TriGenT {
  int K = 0;
  int prec = 0;
  std::map<int, BiPolyT<T>> weights;  // k -> coefficient of T^(k-2), exponents in [-1, k-1]
  std::optional<PrincipalPartT<T>> principal;
};

template <class T>
SubstJetT<T> bijet_substitute(const BiJetT<T>& F, Substitution target) {
  SubstJetT<T> out;
  out.D = F.D;
  out.prec = F.prec;
  QSeriesT<T> zero(F.prec);
  for (int t = -1; t <= F.D; ++t) out.by_t.emplace(t, BiPolyT<T>(-1, F.D, zero));
  for (int r = 0; r <= F.D; ++r) {
    for (int s = 0; r + s <= F.D; ++s) {
      const auto& e = F.at(r, s);
      if (e.is_zero()) continue;
      auto& poly = out.by_t.at(r + s);
      if (target == Substitution::XT_YT) {
        poly.at(r, s) = poly.at(r, s) + e;
      } else {
        poly.at(s, s) = (s % 2 == 0) ? poly.at(s, s) + e : poly.at(s, s) - e;
      }
    }
  }
  auto& polar = out.by_t.at(-1);
  if (target == Substitution::XT_YT) {
    polar.at(-1, 0) = QSeriesT<T>::constant(F.polar_u, F.prec);
    polar.at(0, -1) = QSeriesT<T>::constant(F.polar_v, F.prec);
  } else {
    polar.at(0, 0) = QSeriesT<T>::constant(F.polar_u, F.prec);
    polar.at(-1, -1) = QSeriesT<T>::constant(-F.polar_v, F.prec);
  }
  return out;
}

template <class T>
std::vector<std::pair<int, int>> nonzero_cells(const BiPolyT<T>& p) {
  std::vector<std::pair<int, int>> out;
  for (int a = p.lo; a <= p.hi; ++a)
    for (int b = p.lo; b <= p.hi; ++b)
      if (!p.at(a, b).is_zero()) out.emplace_back(a, b);
  return out;
}

template <class T>
BiPolyT<T> bipoly_mul(const BiPolyT<T>& a, const BiPolyT<T>& b, int lo, int hi, int prec) {
  BiPolyT<T> r(lo, hi, QSeriesT<T>(prec));
  auto na = nonzero_cells(a);
  if (na.empty()) return r;
  auto nb = nonzero_cells(b);
  for (auto [a1, b1] : na)
    for (auto [a2, b2] : nb) {
      if (!r.contains(a1 + a2, b1 + b2)) throw ConsistencyError("product monomial outside the weight grid");
      r.at(a1 + a2, b1 + b2) = r.at(a1 + a2, b1 + b2) + qs_mul(a.at(a1, b1), b.at(a2, b2));
    }
  return r;
}

template <class T>
bool bipoly_is_zero(const BiPolyT<T>& p) {
  for (const auto& c : p.cells)
    if (!c.is_zero()) return false;
  return true;
}

// Collects the product by powers of T. Weight k is the coefficient of T^(k-2).
template <class T>
TriGenT<T> trigen_mul(const SubstJetT<T>& A, const SubstJetT<T>& B, int K) {
  int prec = std::min(A.prec, B.prec);
  auto polar_nonzero = [](const SubstJetT<T>& S) { return !bipoly_is_zero(S.by_t.at(-1)); };
  int need = (polar_nonzero(A) || polar_nonzero(B)) ? K - 1 : K - 3;
  if (std::min(A.D, B.D) < need)
    throw PrecisionError("truncation exhausted: jet degree " + std::to_string(std::min(A.D, B.D)) +
                         " cannot reach weight " + std::to_string(K));
  TriGenT<T> out;
  out.K = K;
  out.prec = prec;
  auto slice = [&](int t, int lo, int hi) {
    BiPolyT<T> acc(lo, hi, QSeriesT<T>(prec));
    for (const auto& [t1, p1] : A.by_t) {
      int t2 = t - t1;
      auto it = B.by_t.find(t2);
      if (it == B.by_t.end()) continue;
      auto prod = bipoly_mul(p1, it->second, lo, hi, prec);
      for (size_t i = 0; i < acc.cells.size(); ++i) acc.cells[i] = acc.cells[i] + prod.cells[i];
    }
    return acc;
  };
  for (int k = 2; k <= K; k += 2) out.weights.emplace(k, slice(k - 2, -1, k - 1));
  PrincipalPartT<T> pp{slice(-2, -2, 0), slice(-1, -2, 1)};
  if (!bipoly_is_zero(pp.t_minus2) || !bipoly_is_zero(pp.t_minus1)) out.principal = std::move(pp);
  return out;
}

using QSeries = QSeriesT<Cyclotomic>;
using QSeriesC = QSeriesT<ComplexApprox>;
using BiJet = BiJetT<Cyclotomic>;
using BiPoly = BiPolyT<Cyclotomic>;
using SubstJet = SubstJetT<Cyclotomic>;
using TriGen = TriGenT<Cyclotomic>;
using PrincipalPart = PrincipalPartT<Cyclotomic>;
using ExactGrid = Grid<Cyclotomic>;

// Monomials X^e for one variable, exponents -1..k-1.
template <class C>
struct LaurentPolyX {
  int lo = -1;
  std::vector<C> c;  // c[e - lo]

  LaurentPolyX() = default;
  LaurentPolyX(int l, int h, const C& zero) : lo(l), c(static_cast<size_t>(h - l + 1), zero) {}
  int hi() const { return lo + static_cast<int>(c.size()) - 1; }
  const C& at(int e) const { return c.at(static_cast<size_t>(e - lo)); }
  C& at(int e) { return c.at(static_cast<size_t>(e - lo)); }
};

QSeries qs_constant(const Cyclotomic& a, int prec);
QSeries qs_from_integers(const std::vector<long>& c);

}  // namespace kronlab
