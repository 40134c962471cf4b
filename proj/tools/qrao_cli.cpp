// Copyright 2026 The qrao-maxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrao/qrao.hpp"

namespace {

qrao::Graph load_graph_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open graph file " + path);
  return qrao::read_graph(is);
}

void cmd_generate(int n, int degree, int count, std::uint64_t seed, bool weighted,
                  const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    qrao::Graph g =
        qrao::generate_regular_graph(n, degree, qrao::derive_seed(seed, 1, i));
    if (weighted) g = qrao::assign_random_signs(g, qrao::derive_seed(seed, 2, i));
    char name[64];
    std::snprintf(name, sizeof name, "graph_n%d_i%03d.txt", n, i);
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    qrao::write_graph(os, g);
    std::cout << path.string() << '\n';
  }
}

void cmd_oracle(const std::string& graph_path) {
  const qrao::Graph g = load_graph_file(graph_path);
  const qrao::CutSolution best = qrao::brute_force_max_cut(g);
  nlohmann::json out;
  out["opt"] = best.value;
  std::string bits;
  for (auto b : best.bits) bits += b ? '1' : '0';
  out["bits"] = bits;
  std::cout << out.dump(2) << '\n';
}

void cmd_solve(const std::string& graph_path, const std::string& pattern_name, int layers,
               int sweeps, std::uint64_t seed, bool weighted, int shots, int restarts,
               std::optional<double> opt_override, const std::string& save_state_path) {
  qrao::Graph g = load_graph_file(graph_path);
  if (weighted) g = qrao::assign_random_signs(g, qrao::derive_seed(seed, 2));
  const qrao::EntanglementPattern pattern = qrao::pattern_from_name(pattern_name);

  const qrao::Coloring coloring = qrao::greedy_color(g);
  const qrao::QubitAssignment assignment = qrao::assign_qubits(g, coloring);
  const qrao::Observable relaxed = qrao::build_relaxed_hamiltonian(g, assignment);
  const qrao::AnsatzSpec spec =
      qrao::build_ansatz(pattern, layers, assignment, g, qrao::derive_seed(seed, 3));

  qrao::VqeResult best;
  for (int restart = 0; restart < restarts; ++restart) {
    qrao::VqeResult r = qrao::run_vqe(
        spec, relaxed, qrao::random_params(spec.param_count(), qrao::derive_seed(seed, 4, restart)),
        sweeps);
    if (restart == 0 || r.energy > best.energy) best = std::move(r);
  }
  const qrao::StateVector state = qrao::prepare_state(spec, best.params);

  qrao::Rng pauli_rng(qrao::derive_seed(seed, 5));
  const qrao::RoundingReport pauli = qrao::pauli_round(
      state, assignment, g, qrao::PauliRoundingMode::Shots(shots), pauli_rng);
  qrao::Rng magic_rng(qrao::derive_seed(seed, 6));
  const qrao::RoundingReport magic = qrao::magic_round(state, assignment, g, shots, magic_rng);

  nlohmann::json out;
  out["n"] = g.n;
  out["edges"] = g.edges.size();
  out["num_qubits"] = assignment.num_qubits;
  out["pattern"] = pattern_name;
  out["layers"] = layers;
  out["sweeps"] = sweeps;
  out["relaxed_energy"] = best.energy;
  out["energy_trace"] = best.trace;
  out["pauli_cut"] = pauli.best_value;
  out["magic_cut"] = magic.best_value;
  std::string pb, mb;
  for (auto b : pauli.best_bits) pb += b ? '1' : '0';
  for (auto b : magic.best_bits) mb += b ? '1' : '0';
  out["pauli_bits"] = pb;
  out["magic_bits"] = mb;

  double opt = 0.0;
  bool have_opt = false;
  if (opt_override) {
    opt = *opt_override;
    have_opt = true;
  } else if (g.n <= 30) {
    opt = qrao::brute_force_max_cut(g).value;
    have_opt = true;
  }
  if (have_opt) {
    out["opt"] = opt;
    out["normalized_energy"] = best.energy / opt;
    out["pauli_ratio"] = pauli.best_value / opt;
    out["magic_ratio"] = magic.best_value / opt;
  }

  if (!save_state_path.empty()) {
    qrao::save_state(save_state_path, state, assignment);
    out["state_file"] = save_state_path;
  }
  std::cout << out.dump(2) << '\n';
}

void cmd_suite(const std::string& config_path) {
  std::ifstream is(config_path);
  if (!is) throw std::runtime_error("cannot open config " + config_path);
  nlohmann::json j;
  is >> j;
  const qrao::RunConfig cfg = qrao::config_from_json(j);
  const qrao::SuiteOutput out = qrao::run_suite(cfg);
  qrao::emit_outputs(out.records, out.summary, cfg.output_dir);
  std::cout << "wrote " << out.records.size() << " records to " << cfg.output_dir << '\n';
}

void cmd_round(const std::string& state_path, const std::string& graph_path,
               const std::string& method, int shots, std::uint64_t seed, bool exact) {
  const auto [state, assignment] = qrao::load_state(state_path);
  const qrao::Graph g = load_graph_file(graph_path);
  qrao::Rng rng(seed);

  qrao::RoundingReport report;
  if (method == "pauli") {
    report = qrao::pauli_round(state, assignment, g,
                               exact ? qrao::PauliRoundingMode::Exact()
                                     : qrao::PauliRoundingMode::Shots(shots),
                               rng);
  } else if (method == "magic") {
    report = qrao::magic_round(state, assignment, g, shots, rng);
  } else {
    throw std::invalid_argument("round: method must be pauli or magic");
  }

  nlohmann::json out;
  out["method"] = method;
  out["cut"] = report.best_value;
  std::string bits;
  for (auto b : report.best_bits) bits += b ? '1' : '0';
  out["bits"] = bits;
  if (g.n <= 30) out["ratio"] = report.best_value / qrao::brute_force_max_cut(g).value;
  std::cout << out.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-relaxation MaxCut pipeline: QRAC encoding, relaxed-Hamiltonian VQE "
               "on a statevector simulator, and Pauli / magic-state rounding"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate random regular graph files");
  int gen_n = 20, gen_degree = 3, gen_count = 1;
  std::uint64_t gen_seed = 0;
  bool gen_weighted = false;
  std::string gen_out = ".";
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--degree", gen_degree, "Vertex degree");
  gen->add_option("--count", gen_count, "Number of instances");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_flag("--weighted", gen_weighted, "Draw +1/-1 edge weights");
  gen->add_option("--out-dir", gen_out, "Output directory");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact MaxCut of a graph file");
  std::string oracle_graph;
  oracle->add_option("--graph", oracle_graph, "Graph file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a single instance end to end");
  std::string solve_graph, solve_pattern = "linear", solve_save;
  int solve_layers = 1, solve_sweeps = 15, solve_shots = 1000, solve_restarts = 1;
  std::uint64_t solve_seed = 0;
  bool solve_weighted = false;
  double solve_opt = 0.0;
  solve->add_option("--graph", solve_graph, "Graph file")->required();
  solve->add_option("--pattern", solve_pattern, "Entanglement pattern: compatible|linear|random");
  solve->add_option("--layers", solve_layers, "Entanglement layer count");
  solve->add_option("--sweeps", solve_sweeps, "NFT sweeps");
  solve->add_option("--seed", solve_seed, "RNG seed");
  solve->add_flag("--weighted", solve_weighted, "Draw +1/-1 edge weights before solving");
  solve->add_option("--shots", solve_shots, "Rounding shots");
  solve->add_option("--restarts", solve_restarts, "VQE restarts, best energy kept");
  auto* solve_opt_flag = solve->add_option("--opt", solve_opt, "Known optimum (required for n > 30)");
  solve->add_option("--save-state", solve_save, "Write the relaxed state to this JSON file");

  // suite
  auto* suite = app.add_subcommand("suite", "Run a configured experiment sweep");
  std::string suite_config;
  suite->add_option("--config", suite_config, "JSON config file")->required();

  // round
  auto* round = app.add_subcommand("round", "Re-round a saved relaxed state");
  std::string round_state, round_graph, round_method = "pauli";
  int round_shots = 1000;
  std::uint64_t round_seed = 0;
  bool round_exact = false;
  round->add_option("--state", round_state, "Saved state JSON")->required();
  round->add_option("--graph", round_graph, "Graph file")->required();
  round->add_option("--method", round_method, "pauli or magic");
  round->add_option("--shots", round_shots, "Shots");
  round->add_option("--seed", round_seed, "RNG seed");
  round->add_flag("--exact", round_exact, "Exact expectations for Pauli rounding");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      cmd_generate(gen_n, gen_degree, gen_count, gen_seed, gen_weighted, gen_out);
    } else if (oracle->parsed()) {
      cmd_oracle(oracle_graph);
    } else if (solve->parsed()) {
      cmd_solve(solve_graph, solve_pattern, solve_layers, solve_sweeps, solve_seed, solve_weighted,
                solve_shots, solve_restarts,
                solve_opt_flag->count() ? std::optional<double>(solve_opt) : std::nullopt,
                solve_save);
    } else if (suite->parsed()) {
      cmd_suite(suite_config);
    } else if (round->parsed()) {
      cmd_round(round_state, round_graph, round_method, round_shots, round_seed, round_exact);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
