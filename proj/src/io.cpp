#include "kronlab/io.hpp"

namespace kronlab {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Cyclotomic& c) {
  Json j;
  j["order"] = c.order();
  Json co = Json::array();
  for (const auto& x : c.coeffs()) co.push_back(to_string(x));
  j["coeffs"] = co;
  return j;
}

Json to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const DirichletCharacter& chi) {
  Json j;
  j["modulus"] = chi.modulus();
  Json v = Json::array();
  for (const auto& x : chi.values()) v.push_back(to_json(x));
  j["values"] = v;
  j["even"] = chi.is_even();
  j["primitive"] = chi.is_primitive();
  return j;
}

Json to_json(const QSeries& f) {
  Json j;
  j["prec"] = f.prec();
  Json co = Json::array();
  for (const auto& x : f.coeffs()) co.push_back(to_json(x));
  j["coeffs"] = co;
  return j;
}

Json to_json(const BiJet& J) {
  Json j;
  j["degree"] = J.D;
  j["prec"] = J.prec;
  j["polar_u"] = to_json(J.polar_u);
  j["polar_v"] = to_json(J.polar_v);
  Json e = Json::object();
  for (int r = 0; r <= J.D; ++r)
    for (int s = 0; r + s <= J.D; ++s)
      if (!J.at(r, s).is_zero()) e["u" + std::to_string(r) + "_v" + std::to_string(s)] = to_json(J.at(r, s));
  j["entries"] = e;
  return j;
}

Json to_json(const KroneckerJet& J) {
  Json j;
  j["route"] = J.route == JetRoute::Laurent ? "laurent" : "fourier";
  j["character"] = to_json(J.chi);
  j["jet"] = to_json(J.jet);
  return j;
}

std::string monomial_key(int a, int b) { return "X" + std::to_string(a) + "_Y" + std::to_string(b); }

Json to_json(const BiPoly& p) {
  Json m = Json::object();
  for (auto [a, b] : nonzero_cells(p)) m[monomial_key(a, b)] = to_json(p.at(a, b));
  return Json{{"monomials", m}};
}

Json to_json(const ExactGrid& g) {
  Json m = Json::object();
  for (int a = g.lo; a <= g.hi; ++a)
    for (int b = g.lo; b <= g.hi; ++b)
      if (!g.at(a, b).is_zero()) m[monomial_key(a, b)] = to_json(g.at(a, b));
  return m;
}

Json to_json(const Grid<std::complex<double>>& g) {
  Json m = Json::object();
  for (int a = g.lo; a <= g.hi; ++a)
    for (int b = g.lo; b <= g.hi; ++b)
      if (g.at(a, b) != std::complex<double>(0)) m[monomial_key(a, b)] = to_json(g.at(a, b));
  return m;
}

Json to_json(const TriGen& T) {
  Json j;
  if (T.principal) {
    j["principal"] = Json{{"T^-2", to_json(T.principal->t_minus2)}, {"T^-1", to_json(T.principal->t_minus1)}};
  } else {
    j["principal"] = nullptr;
  }
  Json w = Json::object();
  for (const auto& [k, p] : T.weights) w[std::to_string(k)] = to_json(p);
  j["weights"] = w;
  return j;
}

Json to_json(const LaurentPolyX<Cyclotomic>& p) {
  Json m = Json::object();
  for (int e = p.lo; e <= p.hi(); ++e)
    if (!p.at(e).is_zero()) m["X" + std::to_string(e)] = to_json(p.at(e));
  return m;
}

Json to_json(const SignCharacter& e) {
  Json j;
  j["level"] = e.N;
  Json s = Json::object();
  for (auto& [p, v] : e.sign) s[std::to_string(p)] = v;
  j["signs"] = s;
  return j;
}

Rational rational_from_json(const Json& j) { return rational_from_string(j.get<std::string>()); }

Cyclotomic cyclotomic_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return Cyclotomic(j.at("order").get<long>(), std::move(c));
}

QSeries qseries_from_json(const Json& j) {
  std::vector<Cyclotomic> c;
  for (const auto& x : j.at("coeffs")) c.push_back(cyclotomic_from_json(x));
  if (static_cast<int>(c.size()) != j.at("prec").get<int>()) throw std::invalid_argument("prec/coeffs mismatch");
  return QSeries(std::move(c));
}

}  // namespace kronlab
