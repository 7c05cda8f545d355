#include "kronlab/series.hpp"

namespace kronlab {

QSeries qs_constant(const Cyclotomic& a, int prec) { return QSeries::constant(a, prec); }

QSeries qs_from_integers(const std::vector<long>& c) {
  std::vector<Cyclotomic> v;
  v.reserve(c.size());
  for (long x : c) v.emplace_back(x);
  return QSeries(std::move(v));
}

}  // namespace kronlab
