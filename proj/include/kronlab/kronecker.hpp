#pragma once

#include <vector>

#include "kronlab/dirichlet.hpp"
#include "kronlab/modforms.hpp"
#include "kronlab/series.hpp"

namespace kronlab {

enum class JetRoute { Laurent, Fourier };

struct KroneckerJet {
  BiJet jet;
  DirichletCharacter chi;
  JetRoute route;
};

// Throws ConfigError unless chi is primitive, ParityError unless it is even.
void require_even_primitive(const DirichletCharacter& chi);

// Entry (r,s) = -theta^min(r,s)(G_{k,chibar} + H_{k,chi}) / (r! s!), k = |r-s| + 1.
KroneckerJet kron_laurent(const DirichletCharacter& chi, int P, int D);
// Constant term from twisted Bernoulli numbers, q^n terms from the divisor sum of sinh(du + (n/d)v).
KroneckerJet kron_fourier(const DirichletCharacter& chi, int P, int D);

// sum_{m1+m2=m} (-1)^m2 C(k1+m-1, m2) C(k2+m-1, m1) theta^m1 f theta^m2 g
QSeries rc_bracket(const QSeries& f, int k1, const QSeries& g, int k2, int m);
// Adds scale * (d_{k2,2} theta^{m+1} f / (m+k1) + (-1)^m d_{k1,2} theta^{m+1} g / (m+k2)).
QSeries rc_bracket_modified(const QSeries& f, int k1, const QSeries& g, int k2, int m, const Cyclotomic& scale);

// g_{k,m,chi}; m = -1 gives the constant chi(0) for k = 2 and 0 otherwise.
QSeries g_single(int k, int m, const DirichletCharacter& chi, int P);

struct GCoefficient {
  QSeries bracket;      // empty-precision series when m < 0
  QSeries convolution;
};
// Both routes; throws ConsistencyError when they differ (m >= 0).
GCoefficient g_coefficient(int k1, int k2, int m, const DirichletCharacter& chi, int P);

// Product F^chi(XT,YT) F^chibar(T,-XYT) up to weight K.
// Closed form through g_{k1,k2,m}:
TriGen product_B(const DirichletCharacter& chi, int K, int P);
// The weight-k slice alone (closed form).
BiPoly product_B_slice(const DirichletCharacter& chi, int k, int P);
// Raw multiplication of Laurent-route jets (jet degree K-1):
TriGen product_B_raw(const DirichletCharacter& chi, int K, int P);

// Limit jet of F^chi slashed by W_M, as a precision-1 jet of degree D.
BiJet kron_cusp_limit_jet(const DirichletCharacter& chi, long M, int D);
// Constant terms of the weight-k slice at every cusp W_M, M | N (ordered as atkin_lehner_cusps).
Grid<std::vector<Cyclotomic>> product_B_cusp_values(const DirichletCharacter& chi, int k);

}  // namespace kronlab
