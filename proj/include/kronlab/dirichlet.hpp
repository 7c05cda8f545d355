#pragma once

#include <string>
#include <vector>

#include "kronlab/cyclotomic.hpp"

namespace kronlab {

class DirichletCharacter {
 public:
  // exps[a] = e with chi(a) = zeta_order^e, or -1 where chi(a) = 0.
  DirichletCharacter(long modulus, long order, std::vector<long> exps);

  long modulus() const { return modulus_; }
  long order() const { return order_; }
  Cyclotomic operator()(long n) const;
  long exponent(long n) const;  // -1 when the value is zero
  const std::vector<Cyclotomic>& values() const { return values_; }

  bool is_even() const;
  bool is_primitive() const;
  bool is_trivial() const { return order_ == 1; }
  bool is_real() const { return order_ <= 2; }
  long conductor() const;
  DirichletCharacter conj() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.exps_ == b.exps_;
  }

 private:
  bool trivial_mod(long d) const;

  long modulus_;
  long order_;
  std::vector<long> exps_;
  std::vector<Cyclotomic> values_;
};

// All characters mod N, sorted by (order, value tuple). The trivial one comes first.
std::vector<DirichletCharacter> enumerate_characters(long N);
DirichletCharacter trivial_character(long N);
bool is_even(const DirichletCharacter& chi);
bool is_primitive(const DirichletCharacter& chi);

Cyclotomic gauss_sum(const DirichletCharacter& chi);

// N^(n-1) sum_{h mod N} chi(h) B_n(h/N)
Cyclotomic twisted_bernoulli(unsigned n, const DirichletCharacter& chi);
// n! [t^n] sum_{a=1}^{N} chi(a) t e^{at} / (e^{Nt} - 1), by power-series division
Cyclotomic twisted_bernoulli_genfun(unsigned n, const DirichletCharacter& chi);

// L(chi, 1-k) = -B_{k,chi}/k; throws ParityError unless chi(-1) = (-1)^k.
Cyclotomic l_value_negative(const DirichletCharacter& chi, unsigned k);

enum class LMode { Direct, Continued };

struct LValue {
  ComplexApprox value;
  double bound;
};

// sum chi(n) n^-s through Hurwitz zeta with Euler-Maclaurin tails.
// Direct mode requires Re(s) > 1; Continued mode allows any s != 1.
LValue l_value_numeric(const DirichletCharacter& chi, ComplexApprox s, LMode mode = LMode::Direct);
ComplexApprox hurwitz_zeta(ComplexApprox s, double a, double* bound = nullptr);

}  // namespace kronlab
