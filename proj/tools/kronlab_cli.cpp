#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kronlab/errors.hpp"
#include "kronlab/kronecker.hpp"
#include "kronlab/modforms.hpp"
#include "kronlab/ntheory.hpp"
#include "kronlab/periods.hpp"
#include "kronlab/verify.hpp"

using namespace kronlab;

namespace {

// Flags given on the command line win over KRONLAB_* variables.
void add_common(CLI::App* sub, RunConfig& cfg, std::optional<double>& tol) {
  sub->add_option("--level", cfg.level, "level N")->envname("KRONLAB_LEVEL");
  sub->add_option("--char", cfg.character, "character: trivial, auto or an index")->envname("KRONLAB_CHAR");
  sub->add_option("--qprec", cfg.qprec, "q-precision")->envname("KRONLAB_QPREC");
  sub->add_option("--kmax,--tmax", cfg.kmax, "max weight")->envname("KRONLAB_KMAX");
  sub->add_option("--deg", cfg.deg, "jet degree")->envname("KRONLAB_DEG");
  sub->add_option("--tol", tol, "tolerance override")->envname("KRONLAB_TOL");
  sub->add_option("--out", cfg.out, "output file")->envname("KRONLAB_OUT");
  sub->add_option("--seed", cfg.seed, "sample seed")->envname("KRONLAB_SEED");
  sub->add_flag("--bigfloat", cfg.bigfloat, "128-bit floating point")->envname("KRONLAB_BIGFLOAT");
}

void emit(const RunConfig& cfg, const Json& body) {
  Json j;
  j["config"] = config_json(cfg);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw ConfigError("cannot write " + cfg.out);
    f << text;
  }
}

SignCharacter parse_eps(long N, const std::string& spec) {
  auto primes = prime_factors(N);
  if (spec.empty() || spec == "+" || spec == "1") {
    std::map<long, int> s;
    for (long p : primes) s[p] = 1;
    return SignCharacter::from_signs(N, s);
  }
  std::vector<int> signs;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "+1" || tok == "1" || tok == "+") signs.push_back(1);
    else if (tok == "-1" || tok == "-") signs.push_back(-1);
    else throw ConfigError("bad sign '" + tok + "' in --eps");
  }
  if (signs.size() != primes.size())
    throw ConfigError("--eps needs one sign per prime divisor of the level (" + std::to_string(primes.size()) + ")");
  std::map<long, int> s;
  for (size_t i = 0; i < primes.size(); ++i) s[primes[i]] = signs[i];
  return SignCharacter::from_signs(N, s);
}

int cmd_expand(RunConfig& cfg, bool product, const std::string& route) {
  auto chi = select_character(cfg.level, cfg.character);
  Json body;
  if (product) {
    body["product"] = to_json(product_B(chi, cfg.kmax, cfg.qprec));
  } else if (route == "fourier") {
    body["jet"] = to_json(kron_fourier(chi, cfg.qprec, cfg.deg));
  } else if (route == "laurent") {
    body["jet"] = to_json(kron_laurent(chi, cfg.qprec, cfg.deg));
  } else {
    throw ConfigError("unknown route '" + route + "'");
  }
  emit(cfg, body);
  return 0;
}

int cmd_verify(RunConfig& cfg, const std::string& suite) {
  auto rep = run_suite(suite, cfg);
  emit(cfg, rep.to_json());
  return rep.pass() ? 0 : 1;
}

int cmd_periods(RunConfig& cfg, int k, const std::string& form, const std::string& eps_spec, bool twisted) {
  if (k < 2 || k % 2) throw ConfigError("weight must be even and at least 2");
  if (!is_squarefree(cfg.level)) throw ConfigError("level must be square-free");
  double tol = cfg.tol.value_or(1e-8);
  Json body;
  body["form"] = form;
  if (form == "eis") {
    auto eps = parse_eps(cfg.level, eps_spec);
    if (k == 2 && eps.is_trivial()) throw ConfigError("no weight-2 Eisenstein series with trivial sign character");
    EisensteinPeriod p;
    if (twisted) {
      auto chi = select_identity_character(cfg.level, cfg.character);
      p = period_eisenstein_twisted(k, eps, chi);
      body["character"] = to_json(chi);
    } else {
      p = period_eisenstein(k, eps);
    }
    auto om = omega_constants(k);
    body["eps"] = to_json(eps);
    body["twisted"] = twisted;
    body["omega_minus"] = to_json(om.omega_minus);
    body["omega_plus"] = om.omega_plus ? to_json(*om.omega_plus) : Json(nullptr);
    body["even_omega_plus"] = to_json(p.even);
    body["odd_omega_minus"] = to_json(p.odd);
    emit(cfg, body);
    return 0;
  }
  if (form != "cusp0") throw ConfigError("unknown form '" + form + "'");
  auto chi = select_identity_character(cfg.level, cfg.character);
  int P = std::max(cfg.qprec, 80);
  auto res = extract_rank_one_cusp(product_B_slice(chi, k, P), product_B_cusp_values(chi, k),
                                   eisenstein_basis(k, cfg.level, P));
  if (res.rank != 1)
    throw RankError("cusp remainder at weight " + std::to_string(k) + " has rank " + std::to_string(res.rank), res.rank);
  Json rep = cusp_period_report(*res.eigenform, k, chi, tol, cfg.bigfloat);
  for (auto it = rep.begin(); it != rep.end(); ++it) body[it.key()] = it.value();
  emit(cfg, body);
  return rep["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Kronecker series, Eisenstein series and period polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<double> tol;

  auto* expand = app.add_subcommand("expand", "dump a Kronecker jet or the product generating function");
  add_common(expand, cfg, tol);
  bool product = false;
  std::string route = "laurent";
  expand->add_flag("--product", product, "dump product_B");
  expand->add_option("--route", route, "laurent or fourier")->envname("KRONLAB_ROUTE");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, cfg, tol);
  std::string suite = "expansions";
  verify->add_option("--suite", suite, "expansions|modular|elliptic|cusp-limits|identity|periods")
      ->envname("KRONLAB_SUITE");

  auto* periods = app.add_subcommand("periods", "period polynomials");
  add_common(periods, cfg, tol);
  int weight = 12;
  std::string form = "eis", eps_spec;
  bool twisted = false;
  periods->add_option("--weight", weight, "weight k")->envname("KRONLAB_WEIGHT");
  periods->add_option("--form", form, "eis or cusp0")->envname("KRONLAB_FORM");
  periods->add_option("--eps", eps_spec, "Atkin-Lehner signs, one per prime, e.g. -1 or +1,-1")
      ->envname("KRONLAB_EPS");
  periods->add_flag("--twisted", twisted, "twist by the character");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.tol = tol;

  try {
    if (*expand) {
      cfg.mode = "expand";
      return cmd_expand(cfg, product, route);
    }
    if (*verify) {
      cfg.mode = "verify:" + suite;
      return cmd_verify(cfg, suite);
    }
    cfg.mode = "periods";
    return cmd_periods(cfg, weight, form, eps_spec, twisted);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ParityError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
