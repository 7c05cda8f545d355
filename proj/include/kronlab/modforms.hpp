#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kronlab/dirichlet.hpp"
#include "kronlab/series.hpp"

namespace kronlab {

// Sign character on the Atkin-Lehner group of a square-free level:
// one sign per prime divisor, extended multiplicatively.
struct SignCharacter {
  long N = 1;
  std::map<long, int> sign;

  int operator()(long M) const;
  bool is_trivial() const;
  std::string label() const;  // e.g. "+" or "5:-,7:+"

  static std::vector<SignCharacter> all(long N);
  static SignCharacter from_signs(long N, const std::map<long, int>& s);
};

enum class EisKind { G, GChi, HChi, GLevel };

struct EisensteinForm {
  EisKind kind = EisKind::G;
  int k = 0;
  long N = 1;
  QSeries series;
  bool parity_ok = true;
  std::optional<SignCharacter> eps;
};

EisensteinForm eisenstein_g(int k, int P);
EisensteinForm eisenstein_g_chi(int k, const DirichletCharacter& chi, int P);
// At N = 1 this equals G_k, constant term included; for N > 1 the constant term is 0.
EisensteinForm eisenstein_h_chi(int k, const DirichletCharacter& chi, int P);
EisensteinForm eisenstein_level(int k, const SignCharacter& eps, int P);

// sum_{d | N2} eps2(d) d^{k/2} f(q^d), same precision as f.
QSeries level_raise(const QSeries& f, int k, const SignCharacter& eps2);

// a(np) + [p does not divide N] p^{k-1} a(n/p); output precision floor(P/p).
QSeries hecke_Tp(const QSeries& f, int k, long N, long p);

enum class CuspKind { G, H };

// Limit at i*infinity of G_{r,chi} or H_{r,chi} slashed by W_M (W_1 = identity, W_N = (0,-1;N,0)).
Cyclotomic cusp_limit(CuspKind kind, int r, const DirichletCharacter& chi, long M);
// Same for G^eps_{k,N}.
Cyclotomic eisenstein_level_cusp_value(int k, const SignCharacter& eps, long M);

struct LocalLFactor {
  long ell = 2;
  std::vector<Cyclotomic> num;  // polynomial in X = ell^-s
  std::vector<Cyclotomic> den;  // constant term 1
  std::vector<Cyclotomic> expand(int n) const;  // coefficients of X^0..X^n
};

LocalLFactor local_factor_g_chi(int k, const DirichletCharacter& chi, long ell);
LocalLFactor local_factor_h_chi(int k, const DirichletCharacter& chi, long ell);
LocalLFactor local_factor_level(int k, const SignCharacter& eps, long ell);
// Hecke eigenform of level N: generic factor for ell not dividing N, else 1/(1 - a_ell X).
LocalLFactor local_factor_hecke(int k, long N, const Cyclotomic& a_ell, long ell);

Cyclotomic petersson_ratio(const std::map<long, Cyclotomic>& a_f_at_p, int k, const SignCharacter& eps2);

// <G^eps_{k,N}, G^eps_{k,N}> as an exact multiple of omega^+_{G_k}.
struct OmegaPlusMultiple {
  Cyclotomic coeff;
};
Rational eisenstein_selfnorm_ratio(int k, const SignCharacter& eps);
OmegaPlusMultiple eisenstein_selfnorm(int k, const SignCharacter& eps);
// Selfnorm with the factor prod (1 + eps(p) p^{1-k/2}) left out (it can vanish at k = 2).
OmegaPlusMultiple eisenstein_selfnorm_reduced(int k, const SignCharacter& eps);

// Eisenstein basis of weight k and square-free level N.
struct EisBasisElement {
  std::string label;
  SignCharacter eps;
  QSeries series;
  std::vector<Cyclotomic> cusp_values;  // one per entry of cusps
};
std::vector<EisBasisElement> eisenstein_basis(int k, long N, int P);
std::vector<long> atkin_lehner_cusps(long N);  // the divisors M of N

struct RankOneResult {
  int rank = 0;
  bool eisenstein_consistent = true;
  std::vector<ExactGrid> multipliers;  // per basis element
  BiPoly remainder;
  ExactGrid R;                         // remainder = R * f
  std::optional<QSeries> eigenform;    // normalized a(1) = 1
};

// slice_cusp_values: per monomial, the constant terms of the slice at every cusp W_M.
RankOneResult extract_rank_one_cusp(const BiPoly& slice, const Grid<std::vector<Cyclotomic>>& slice_cusp_values,
                                    const std::vector<EisBasisElement>& basis);

// Product over p | N of -a_p p^{1-k/2}; the W_N eigenvalue of a newform.
int atkin_lehner_sign(const QSeries& f, int k, long N);

}  // namespace kronlab
