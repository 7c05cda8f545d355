#pragma once

#include <complex>
#include <string>

#include "json.hpp"
#include "kronlab/dirichlet.hpp"
#include "kronlab/kronecker.hpp"
#include "kronlab/periods.hpp"
#include "kronlab/series.hpp"

namespace kronlab {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Cyclotomic& c);
Json to_json(const std::complex<double>& z);
Json to_json(const DirichletCharacter& chi);
Json to_json(const QSeries& f);
Json to_json(const BiJet& J);
Json to_json(const KroneckerJet& J);
Json to_json(const BiPoly& p);
Json to_json(const ExactGrid& g);
Json to_json(const Grid<std::complex<double>>& g);
Json to_json(const TriGen& T);
Json to_json(const LaurentPolyX<Cyclotomic>& p);
Json to_json(const SignCharacter& e);

Rational rational_from_json(const Json& j);
Cyclotomic cyclotomic_from_json(const Json& j);
QSeries qseries_from_json(const Json& j);

std::string monomial_key(int a, int b);  // "X1_Y0", "X-1_Y2"

}  // namespace kronlab
