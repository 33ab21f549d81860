// holopois: Poisson structure diagnostics from a definition file.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "holopois/parse.hpp"
#include "json_out.hpp"

using namespace holopois;
using cli::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3, kBudget = 4 };

struct Options {
  bool json = false;
  std::size_t budget = kDefaultStepBudget;
  std::string input;
  int kmax = 2;
  long wmax = 4;
  std::optional<long> wmin;
  std::size_t basis_cap = kDefaultBasisCap;
  bool serial = false;
  std::string point;
  std::string vars = "w, z";
  std::string betti;
  std::uint64_t seed = 20181018;
  int samples = 20;
};

// A command fills `result` and writes its plain-text form to `text`.
struct Outcome {
  json result;
  std::string text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t column = 1;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    std::string cell = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    try {
      out.push_back(parse_rational(cell));
    } catch (const std::exception&) {
      throw ParseError("invalid " + what + " entry \"" + cell + "\"", column + (b == std::string::npos ? 0 : b));
    }
    column += item.size() + 1;
  }
  return out;
}

Outcome cmd_check(const StructureDefinition& def) {
  Polyvector jac = jacobiator(def.bivector);
  json r = cli::structure_json(def);
  r["jacobi"] = jac.is_zero() ? "pass" : "fail";
  r["jacobiator"] = jac.is_zero() ? json(nullptr) : cli::to_json(jac);
  std::string text = "pi = " + to_string(def.bivector) + "\nJacobi: " + (jac.is_zero() ? "pass" : "fail") + "\n";
  if (!jac.is_zero()) text += "[pi, pi] = " + to_string(jac) + "\n";
  return {r, text};
}

Outcome cmd_modular(const StructureDefinition& def) {
  auto P = PoissonStructure::create(def.bivector);
  Polyvector zeta = modular_field(P);
  const bool preserved = lie_derivative(zeta, P.bivector()).is_zero();
  json comps = json::array();
  for (const auto& c : zeta.as_components()) comps.push_back(cli::to_json(c));
  json r{{"zeta", cli::to_json(zeta)}, {"components", comps}, {"lie_derivative_vanishes", preserved}};
  std::string text = "zeta = " + to_string(zeta) + "\nL_zeta pi = 0: " + (preserved ? "yes" : "NO") + "\n";
  return {r, text};
}

Outcome cmd_report(const StructureDefinition& def, const Options& opt) {
  auto P = PoissonStructure::create(def.bivector);
  std::ostringstream text;
  json r = cli::structure_json(def);
  r["modular_field"] = cli::to_json(modular_field(P));
  json foliation = json::array();
  for (const auto& g : modular_foliation_generators(P)) foliation.push_back(cli::to_json(g));
  r["modular_foliation"] = foliation;
  json dmod = json::array();
  for (const auto& g : dmodule_generators(P))
    dmod.push_back({{"source", cli::to_json(g.source)},
                    {"scalar_part", cli::to_json(g.scalar_part)},
                    {"vector_part", cli::to_json(g.vector_part)}});
  r["dmodule_generators"] = dmod;
  auto locus = zero_leaf_locus(P, opt.budget);
  r["zero_leaf_locus"] = cli::to_json(locus);

  text << "pi = " << to_string(P.bivector()) << "\nzeta = " << to_string(modular_field(P)) << '\n';
  text << "zero-leaf locus dimension: " << locus.dimension << '\n';

  r["pfaffian"] = nullptr;
  r["reduced"] = nullptr;
  r["verdict"] = nullptr;
  r["witness"] = nullptr;
  r["repeated_factor"] = nullptr;
  r["surface"] = nullptr;
  r["surface_h2"] = nullptr;
  if (P.dimension() % 2 == 0) {
    Poly pf = pfaffian(P);
    r["pfaffian"] = cli::to_json(pf);
    text << "Pfaffian: " << to_string(pf) << '\n';
    if (!pf.is_zero()) {
      auto divisor = degeneracy_divisor(P);
      r["reduced"] = divisor.reduced;
      auto v = holonomy_verdict(P, opt.budget);
      r["verdict"] = to_string(v.verdict);
      if (v.witness) r["witness"] = cli::to_json(*v.witness);
      if (v.repeated_factor) r["repeated_factor"] = cli::to_json(*v.repeated_factor);
      text << "reduced: " << (divisor.reduced ? "yes" : "no") << "\nverdict: " << to_string(v.verdict) << '\n';
      if (v.witness) text << "witness dimension: " << v.witness->dimension << '\n';
      if (v.repeated_factor) text << "repeated factor: " << to_string(*v.repeated_factor) << '\n';
      if (P.dimension() == 2) {
        auto leaves = surface_leaf_report(P, opt.budget);
        r["surface"] = cli::to_json(leaves);
        text << "singular locus dimension: " << leaves.singular_dimension
             << "\nTjurina total: " << leaves.tjurina_total.to_string() << '\n';
        std::optional<std::vector<long>> betti;
        if (!opt.betti.empty()) {
          betti.emplace();
          for (const auto& q : parse_rational_list(opt.betti, "Betti")) {
            if (q.get_den() != 1 || q < 0) throw ParseError("Betti numbers must be non-negative integers", 1);
            betti->push_back(q.get_num().get_si());
          }
        }
        try {
          auto h2 = surface_h2_report(P, betti, opt.budget);
          r["surface_h2"] = cli::to_json(h2);
          text << "dim H^2 = " << h2.formula;
          if (h2.h2) text << " = " << *h2.h2;
          text << '\n';
        } catch (const BudgetExceeded&) {
          throw;
        } catch (const PreconditionError& e) {
          r["surface_h2"] = {{"unavailable", e.what()}};
          text << "H^2 report unavailable: " << e.what() << '\n';
        }
      }
    } else {
      text << "Pfaffian vanishes identically; no verdict\n";
    }
  } else {
    text << "odd dimension: no Pfaffian or verdict\n";
  }
  return {r, text.str()};
}

Outcome cmd_cohomology(const StructureDefinition& def, const Options& opt) {
  auto P = PoissonStructure::create(def.bivector);
  CohomologyOptions copt;
  copt.basis_cap = opt.basis_cap;
  copt.parallel = !opt.serial;
  copt.w_min = opt.wmin;
  auto table = cohomology_table(P, opt.kmax, opt.wmax, copt);
  return {cli::to_json(table), table.to_text()};
}

Outcome cmd_tjurina(const Options& opt, std::string& digest_source) {
  Poly f = [&] {
    if (std::filesystem::is_regular_file(opt.input)) {
      digest_source = read_file(opt.input);
      auto def = parse_structure(digest_source);
      return pfaffian(def.bivector);
    }
    digest_source = opt.input;
    std::vector<std::string> names;
    std::stringstream ss(opt.vars);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
      names.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    ChartPtr chart;
    try {
      chart = Chart::make(names);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("--vars: ") + e.what(), 1);
    }
    return parse_poly(opt.input, chart);
  }();
  json r{{"polynomial", cli::to_json(f)}, {"variables", f.chart()->names()}, {"point", nullptr}};
  Count tau = Count(0);
  if (opt.point.empty()) {
    tau = tjurina_global(f, opt.budget);
    r["scope"] = "global";
  } else {
    auto point = parse_rational_list(opt.point, "point");
    if (point.size() != f.chart()->size())
      throw ParseError("--point needs " + std::to_string(f.chart()->size()) + " coordinates", 1);
    tau = tjurina_local(f, point, opt.budget);
    json p = json::array();
    for (const auto& q : point) p.push_back(q.get_str());
    r["point"] = p;
    r["scope"] = "local";
  }
  r["tjurina"] = cli::to_json(tau);
  return {r, "f = " + to_string(f) + "\ntau (" + r["scope"].get<std::string>() + ") = " + tau.to_string() + "\n"};
}

// Sampled identity checks on the given structure.
Outcome cmd_verify(const StructureDefinition& def, const Options& opt) {
  auto P = PoissonStructure::create(def.bivector);
  const ChartPtr& chart = P.chart();
  std::mt19937_64 rng(opt.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_poly = [&] {
    Poly p(chart);
    for (int t = uniform(1, 3); t > 0; --t) {
      Monomial m(chart->size(), 0);
      for (int d = uniform(0, 3); d > 0; --d) ++m[static_cast<std::size_t>(uniform(0, static_cast<int>(chart->size()) - 1))];
      p.add_term(m, uniform(-4, 4));
    }
    return p;
  };
  auto random_polyvector = [&] {
    const int k = uniform(0, static_cast<int>(chart->size()));
    Polyvector a = Polyvector::zero(chart, k);
    for (int t = uniform(1, 2); t > 0; --t) {
      std::vector<unsigned> idx(chart->size());
      std::iota(idx.begin(), idx.end(), 0u);
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(static_cast<std::size_t>(k));
      a += Polyvector::frame(random_poly(), idx);
    }
    return a;
  };

  const Polyvector zeta = modular_field(P);
  std::vector<std::pair<std::string, int>> checks{{"bv^2 = 0", 0},
                                                  {"d_pi^2 = 0", 0},
                                                  {"L_zeta pi = 0", 0},
                                                  {"bv d_pi + d_pi bv = L_zeta", 0},
                                                  {"zeta(f) = -bv H_f", 0},
                                                  {"[zeta, H_f] = H_zeta(f)", 0},
                                                  {"d_pi f = -H_f", 0}};
  if (!lie_derivative(zeta, P.bivector()).is_zero()) checks[2].second = 1;
  for (int s = 0; s < opt.samples; ++s) {
    Polyvector a = random_polyvector();
    Poly f = random_poly();
    Polyvector Hf = hamiltonian(P, f);
    if (!bv(bv(a)).is_zero()) ++checks[0].second;
    if (!lichnerowicz(P, lichnerowicz(P, a)).is_zero()) ++checks[1].second;
    if (!(bv(lichnerowicz(P, a)) + lichnerowicz(P, bv(a)) == lie_derivative(zeta, a))) ++checks[3].second;
    if (!(Polyvector::function(apply(zeta, f)) == -bv(Hf))) ++checks[4].second;
    if (!(schouten(zeta, Hf) == hamiltonian(P, apply(zeta, f)))) ++checks[5].second;
    if (!(lichnerowicz(P, Polyvector::function(f)) == -Hf)) ++checks[6].second;
  }
  json list = json::array();
  bool ok = true;
  std::ostringstream text;
  for (const auto& [name, failures] : checks) {
    list.push_back({{"identity", name}, {"failures", failures}});
    ok = ok && failures == 0;
    text << (failures == 0 ? "ok    " : "FAIL  ") << name << '\n';
  }
  return {{{"seed", opt.seed}, {"samples", opt.samples}, {"checks", list}, {"all_passed", ok}}, text.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson structure diagnostics", "holopois"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options opt;
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_option("--budget", opt.budget, "Groebner reduction step budget")->check(CLI::PositiveNumber);
  app.fallthrough();

  auto file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.input, "Structure definition file")->required();
    return sub;
  };
  file_command("check", "Verify [pi, pi] = 0");
  file_command("modular", "Modular vector field");
  auto* report = file_command("report", "Degeneracy, verdict and surface reports");
  report->add_option("--betti", opt.betti, "Betti numbers b0,b1,b2,... of the open leaf");
  auto* cohomology = file_command("cohomology", "Graded Poisson cohomology table");
  cohomology->add_option("--kmax", opt.kmax, "Largest polyvector degree")->check(CLI::NonNegativeNumber);
  cohomology->add_option("--wmax", opt.wmax, "Largest weight");
  cohomology->add_option("--wmin", opt.wmin, "Smallest weight");
  cohomology->add_option("--basis-cap", opt.basis_cap, "Largest graded piece")->check(CLI::PositiveNumber);
  cohomology->add_flag("--serial", opt.serial, "Evaluate pieces on one thread");
  auto* tjurina = app.add_subcommand("tjurina", "Tjurina number of a polynomial or of a surface Pfaffian");
  tjurina->add_option("input", opt.input, "Structure file or polynomial expression")->required();
  tjurina->add_option("--vars", opt.vars, "Variables for a polynomial expression");
  tjurina->add_option("--point", opt.point, "Rational point \"a,b,...\" for the local number");
  auto* verify = file_command("verify", "Sampled identity checks");
  verify->add_option("--seed", opt.seed, "Random seed");
  verify->add_option("--samples", opt.samples, "Number of samples")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  std::string source;
  Outcome out;
  json error = nullptr;
  int code = kOk;
  try {
    if (command == "tjurina") {
      out = cmd_tjurina(opt, source);
    } else {
      source = read_file(opt.input);
      auto def = parse_structure(source);
      if (command == "check") out = cmd_check(def);
      if (command == "modular") out = cmd_modular(def);
      if (command == "report") out = cmd_report(def, opt);
      if (command == "cohomology") out = cmd_cohomology(def, opt);
      if (command == "verify") out = cmd_verify(def, opt);
    }
  } catch (const ParseError& e) {
    code = kParse;
    error = {{"kind", "parse"}, {"message", e.bare_message()}, {"line", e.line()}, {"column", e.column()}};
  } catch (const BudgetExceeded& e) {
    code = kBudget;
    error = {{"kind", "budget"}, {"message", e.what()}};
  } catch (const JacobiFailure& e) {
    code = kPrecondition;
    error = {{"kind", "precondition"}, {"message", e.what()}, {"jacobiator", cli::to_json(e.jacobiator())}};
  } catch (const PreconditionError& e) {
    code = kPrecondition;
    error = {{"kind", "precondition"}, {"message", e.what()}};
  } catch (const Error& e) {
    code = kParse;
    error = {{"kind", "input"}, {"message", e.what()}};
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.json) {
    json envelope{{"version", kVersion},
                  {"command", command},
                  {"input_digest", "sha256:" + cli::sha256_hex(source)},
                  {"conventions", cli::conventions()},
                  {"result", code == kOk ? out.result : json(nullptr)},
                  {"timing_ms", elapsed}};
    if (code != kOk) envelope["error"] = error;
    std::cout << envelope.dump(2) << '\n';
  } else if (code == kOk) {
    std::cout << out.text;
  } else {
    std::cerr << "holopois " << command << ": ";
    if (error.contains("line") && error["line"].get<std::size_t>() > 0)
      std::cerr << "line " << error["line"] << ", column " << error["column"] << ": ";
    else if (error.contains("column"))
      std::cerr << "column " << error["column"] << ": ";
    std::cerr << error["message"].get<std::string>() << '\n';
  }
  return code;
}
