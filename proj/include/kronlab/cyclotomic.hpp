#pragma once

#include <complex>
#include <vector>

#include "kronlab/rational.hpp"

namespace kronlab {

using ComplexApprox = std::complex<double>;

long euler_phi(long m);
long gcd_l(long a, long b);
long lcm_l(long a, long b);
// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(long m);

// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).
// Mixed-order arithmetic lifts both operands to the lcm of the orders.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& r);  // NOLINT: implicit on purpose
  Cyclotomic(long n);             // NOLINT
  Cyclotomic(int n) : Cyclotomic(static_cast<long>(n)) {}  // NOLINT
  Cyclotomic(long order, std::vector<Rational> coeffs);

  static Cyclotomic zeta(long m, long j = 1);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Cyclotomic lift(long m) const;
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()

  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  ComplexApprox embed_complex() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  long order_;
  std::vector<Rational> coeffs_;
};

Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b);
ComplexApprox embed_complex(const Cyclotomic& a);

}  // namespace kronlab
