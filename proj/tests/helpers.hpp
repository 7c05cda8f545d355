#pragma once

#include <complex>

#include "kronlab/dirichlet.hpp"
#include "kronlab/series.hpp"
#include "oracles.hpp"

namespace testing_util {

using namespace kronlab;

inline DirichletCharacter quadratic5() { return enumerate_characters(5).at(1); }

inline Cyclotomic sqrt5() {
  return Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4) - Cyclotomic::zeta(5, 2) - Cyclotomic::zeta(5, 3);
}

inline QSeries series_of(const std::vector<mpz_class>& c) {
  QSeries s(static_cast<int>(c.size()));
  for (size_t n = 0; n < c.size(); ++n) s.mut(static_cast<int>(n)) = Cyclotomic(Rational(c[n]));
  return s;
}

inline QSeries series_of(const std::vector<mpq_class>& c) {
  QSeries s(static_cast<int>(c.size()));
  for (size_t n = 0; n < c.size(); ++n) s.mut(static_cast<int>(n)) = Cyclotomic(c[n]);
  return s;
}

inline std::vector<std::complex<double>> char_values(const DirichletCharacter& chi) {
  std::vector<std::complex<double>> v;
  for (long h = 0; h < chi.modulus(); ++h) v.push_back(chi(h).embed_complex());
  return v;
}

inline double rel(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

}  // namespace testing_util
