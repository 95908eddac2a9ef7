// Command-line front end: generate games, compute values, simulate
// strategies, round, reduce, and verify the shipped constructions.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlg/bounds.hpp"
#include "nlg/classical.hpp"
#include "nlg/generators.hpp"
#include "nlg/quantum.hpp"
#include "nlg/tsirelson.hpp"
#include "nlg/verify.hpp"
#include "nlg/xor_solver.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) nlg::fail(nlg::ErrorCode::ParseError, "cannot open '" + out_path + "' for writing");
  out << text << "\n";
}

json strategy_json(const nlg::DeterministicStrategy& d) {
  return json{{"a", d.a}, {"b", d.b}};
}

json vectors_json(const nlg::VectorStrategy& vs) {
  return json::parse(nlg::vectors_to_json(vs));
}

struct GenerateSpec {
  std::string name;
  int n = 3;
  int k = 2;
};

nlg::ValidatedGame build_game(const GenerateSpec& g) {
  if (g.name == "chsh") return nlg::chsh();
  if (g.name == "odd-cycle") return nlg::odd_cycle(g.n);
  if (g.name == "magic-square") return nlg::magic_square();
  if (g.name == "kochen-specker") return nlg::kochen_specker(nlg::ks_asset());
  if (g.name == "three-sat-magic") return nlg::three_sat(nlg::magic_square_formula());
  if (g.name == "coloring-cycle") {
    nlg::Graph cycle;
    cycle.n_v = g.n;
    for (int i = 0; i < g.n; ++i) cycle.edges.push_back({i, (i + 1) % g.n});
    return nlg::graph_coloring(cycle, g.k);
  }
  if (g.name == "coloring-hamming") return nlg::graph_coloring(nlg::hamming_graph(g.n), g.k);
  nlg::fail(nlg::ErrorCode::InvalidArgument,
            "unknown game '" + g.name +
                "' (try chsh, odd-cycle, magic-square, kochen-specker, three-sat-magic, "
                "coloring-cycle, coloring-hamming)");
}

bool builtin_strategy(const GenerateSpec& g, nlg::QuantumStrategy& out) {
  if (g.name == "chsh") out = nlg::builtin_chsh();
  else if (g.name == "odd-cycle") out = nlg::builtin_odd_cycle(g.n);
  else if (g.name == "magic-square") out = nlg::builtin_magic_square();
  else if (g.name == "kochen-specker") out = nlg::builtin_ks(nlg::ks_asset());
  else if (g.name == "three-sat-magic") out = nlg::builtin_threesat_magic();
  else return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonlocal game toolkit: classical and quantum values, strategy simulation, "
               "Tsirelson-type bound checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::uint64_t seed = 1;
  int restarts = 32;
  std::uint64_t cap = nlg::kDefaultWorkCap;
  std::string out_path;
  std::string format = "json";
  std::vector<std::string> tolerance_overrides;
  app.add_option("--seed", seed, "seed for all randomized operations");
  app.add_option("--restarts", restarts, "solver restarts");
  app.add_option("--cap", cap, "classical enumeration cap");
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--format", format, "output format (json or csv, where supported)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", tolerance_overrides,
                 "simulator tolerance override, name=value (state-norm, measurement, "
                 "observable, imaginary, boundary-clamp, perfect)");

  GenerateSpec gen;
  auto* generate = app.add_subcommand("generate", "emit a built-in game as JSON");
  generate->add_option("name", gen.name, "game name")->required();
  generate->add_option("--n", gen.n, "cycle length / hamming parameter");
  generate->add_option("--k", gen.k, "number of colors");
  std::string strategy_out;
  generate->add_option("--strategy-out", strategy_out, "also write the built-in quantum strategy");

  std::string game_path, strategy_path, vectors_path;
  auto* classical = app.add_subcommand("classical-value", "exact classical value of a game");
  classical->add_option("game", game_path, "game JSON file")->required();

  auto* quantum = app.add_subcommand("quantum-value", "quantum value of an XOR game");
  quantum->add_option("game", game_path, "game JSON file")->required();
  std::string vectors_out;
  quantum->add_option("--vectors-out", vectors_out, "write the optimal vectors to a file");

  auto* simulate = app.add_subcommand("simulate", "win probability of an explicit strategy");
  simulate->add_option("game", game_path, "game JSON file")->required();
  simulate->add_option("strategy", strategy_path, "strategy JSON file")->required();

  int samples = 1000;
  auto* round = app.add_subcommand("round", "hyperplane rounding of a vector strategy");
  round->add_option("game", game_path, "XOR game JSON file")->required();
  round->add_option("--vectors", vectors_path, "vector strategy file (defaults to solving first)");
  round->add_option("--samples", samples, "number of rounding samples");

  double epsilon = 0.05;
  auto* reduce = app.add_subcommand("reduce", "Johnson-Lindenstrauss dimension reduction");
  reduce->add_option("vectors", vectors_path, "vector strategy file")->required();
  reduce->add_option("--epsilon", epsilon, "accuracy parameter in (0, 1/10)");

  auto* lift = app.add_subcommand("lift", "turn vectors into an explicit quantum strategy");
  lift->add_option("vectors", vectors_path, "vector strategy file")->required();

  auto* check = app.add_subcommand("check-bounds", "Tsirelson-type bound report for an XOR game");
  check->add_option("game", game_path, "game JSON file")->required();
  std::string game_name = "game";
  check->add_option("--name", game_name, "game name for the CSV row");

  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const std::string& entry : tolerance_overrides) {
      const auto eq = entry.find('=');
      if (eq == std::string::npos)
        nlg::fail(nlg::ErrorCode::InvalidArgument, "--tol expects name=value, got '" + entry + "'");
      const std::string name = entry.substr(0, eq);
      const double value = std::stod(entry.substr(eq + 1));
      nlg::QuantumTolerances& tol = nlg::quantum_tolerances();
      if (name == "state-norm") tol.state_norm = value;
      else if (name == "measurement") tol.measurement = value;
      else if (name == "observable") tol.observable = value;
      else if (name == "imaginary") tol.imaginary = value;
      else if (name == "boundary-clamp") tol.boundary_clamp = value;
      else if (name == "perfect") tol.perfect = value;
      else nlg::fail(nlg::ErrorCode::InvalidArgument, "unknown tolerance '" + name + "'");
    }

    if (generate->parsed()) {
      const nlg::ValidatedGame game = build_game(gen);
      if (!strategy_out.empty()) {
        nlg::QuantumStrategy q;
        if (!builtin_strategy(gen, q))
          nlg::fail(nlg::ErrorCode::InvalidArgument,
                    "no built-in strategy for '" + gen.name + "'");
        nlg::save_strategy(q, strategy_out);
      }
      emit(nlg::game_to_json(game.spec), out_path);
    } else if (classical->parsed()) {
      const nlg::ValidatedGame game = nlg::validate(nlg::load_game(game_path));
      const nlg::ClassicalResult r = nlg::classical_value(game, cap);
      json j{{"value", r.value},
             {"strategy", strategy_json(r.strategy)},
             {"workFactor", r.work_factor},
             {"enumeratedSide", r.enumerated_side == nlg::Side::Bob ? "bob" : "alice"}};
      j["valueExact"] = r.value_exact ? json(r.value_exact->str()) : json(nullptr);
      emit(j.dump(2), out_path);
    } else if (quantum->parsed()) {
      const nlg::ValidatedGame game = nlg::validate(nlg::load_game(game_path));
      if (!game.xor_form)
        nlg::fail(nlg::ErrorCode::NotXorGame, "quantum-value requires an XOR game");
      nlg::XorSolveOptions opts;
      opts.seed = seed;
      opts.restarts = restarts;
      const nlg::XorSolveResult r = nlg::quantum_value_xor(*game.xor_form, opts);
      if (!vectors_out.empty()) nlg::save_vectors(r.vectors, vectors_out);
      json j{{"value", r.value},
             {"dualBound", r.dual_bound},
             {"gap", r.gap},
             {"restarts", r.restarts},
             {"iterations", r.iterations},
             {"vectors", vectors_json(r.vectors)}};
      emit(j.dump(2), out_path);
    } else if (simulate->parsed()) {
      const nlg::ValidatedGame game = nlg::validate(nlg::load_game(game_path));
      const nlg::QuantumStrategy q = nlg::load_strategy(strategy_path);
      const nlg::SimulationReport r = nlg::simulate(game, q);
      json per_pair = json::array();
      for (const auto& p : r.per_pair)
        per_pair.push_back({{"s", p.s}, {"t", p.t}, {"pi", p.pi}, {"win", p.win}});
      emit(json{{"winProbability", r.win_probability}, {"perPair", per_pair}}.dump(2), out_path);
    } else if (round->parsed()) {
      const nlg::ValidatedGame game = nlg::validate(nlg::load_game(game_path));
      if (!game.xor_form) nlg::fail(nlg::ErrorCode::NotXorGame, "round requires an XOR game");
      nlg::VectorStrategy vs;
      if (vectors_path.empty()) {
        nlg::XorSolveOptions opts;
        opts.seed = seed;
        opts.restarts = restarts;
        vs = nlg::quantum_value_xor(*game.xor_form, opts).vectors;
      } else {
        vs = nlg::load_vectors(vectors_path);
      }
      const double expectation = nlg::rounding_expectation(*game.xor_form, vs);
      const nlg::RoundingSample r = nlg::sample_rounding(*game.xor_form, vs, seed, samples);
      json j{{"expectation", expectation},
             {"bestValue", r.best_value},
             {"empiricalMean", r.empirical_mean},
             {"samples", samples},
             {"strategy", strategy_json(r.strategy)}};
      j["bestValueExact"] = r.best_value_exact ? json(r.best_value_exact->str()) : json(nullptr);
      emit(j.dump(2), out_path);
    } else if (reduce->parsed()) {
      const nlg::VectorStrategy vs = nlg::load_vectors(vectors_path);
      const nlg::JlReduction r = nlg::jl_reduce(vs, epsilon, seed);
      json j{{"k", r.k},
             {"identity", r.identity},
             {"draws", r.draws},
             {"worstPairDistortion", r.worst_pair_distortion},
             {"worstInnerShift", r.worst_inner_shift},
             {"vectors", vectors_json(r.vectors)}};
      emit(j.dump(2), out_path);
    } else if (lift->parsed()) {
      const nlg::VectorStrategy vs = nlg::load_vectors(vectors_path);
      const nlg::ObservableStrategy o = nlg::vectors_to_strategy(vs);
      emit(nlg::strategy_to_json(nlg::to_measurement_strategy(o)), out_path);
    } else if (check->parsed()) {
      const nlg::ValidatedGame game = nlg::validate(nlg::load_game(game_path));
      nlg::XorSolveOptions opts;
      opts.seed = seed;
      opts.restarts = restarts;
      const nlg::BoundsReport r = nlg::check_bounds(game, opts, cap);
      if (format == "csv") {
        std::ostringstream os;
        os << "game,tau,omega_c,omega_q,omega_q_dual,g_bound,kg_lower_rhs,kg_upper_rhs,"
              "rounded_value,pass\n";
        os << game_name << "," << r.tau << "," << r.omega_c << "," << r.omega_q_value << ","
           << r.omega_q_dual << "," << r.g_bound << "," << r.kg_lower_rhs << ","
           << r.kg_upper_rhs << "," << r.rounded_value << "," << (r.pass() ? 1 : 0);
        emit(os.str(), out_path);
      } else {
        json j{{"tau", r.tau},
               {"omegaC", r.omega_c},
               {"omegaQ", r.omega_q_value},
               {"omegaQDual", r.omega_q_dual},
               {"gBound", r.g_bound},
               {"kgLowerRhs", r.kg_lower_rhs},
               {"kgUpperRhs", r.kg_upper_rhs},
               {"roundedValue", r.rounded_value},
               {"gBoundOk", r.g_bound_ok()},
               {"grothendieckOk", r.grothendieck_ok()},
               {"pass", r.pass()}};
        j["omegaCExact"] = r.omega_c_exact ? json(r.omega_c_exact->str()) : json(nullptr);
        emit(j.dump(2), out_path);
      }
    } else if (verify->parsed()) {
      const auto results = nlg::run_paper_checks(seed);
      const bool ok = nlg::print_paper_checks(results, std::cout);
      return ok ? 0 : 1;
    }
  } catch (const nlg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
