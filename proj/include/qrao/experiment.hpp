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

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "qrao/encoding.hpp"
#include "qrao/graph.hpp"
#include "qrao/random.hpp"
#include "qrao/rounding.hpp"
#include "qrao/vqe.hpp"

namespace qrao {

struct RunConfig {
  std::vector<int> n_list{18, 20, 22, 24};
  int instances_per_n = 50;
  int degree = 3;
  bool weighted = false;
  std::vector<int> depths{0, 1, 2};
  std::vector<EntanglementPattern> patterns{EntanglementPattern::Compatible,
                                            EntanglementPattern::Linear,
                                            EntanglementPattern::Random};
  int sweeps = 15;
  int shots = 1000;
  int restarts = 1;
  std::uint64_t master_seed = 0;
  std::string output_dir = "runs";
  std::string opt_file;  // optional "n instance_id opt" table for n > 30
  int jobs = 0;          // 0 = hardware concurrency
};

struct RunRecord {
  int instance_id = 0;
  int n = 0;
  EntanglementPattern pattern = EntanglementPattern::Compatible;
  int L = 0;
  std::uint64_t seed = 0;  // instance seed; every derived stream is rooted here
  double relaxed_energy = 0.0;
  double opt = 0.0;
  double normalized_energy = 0.0;
  double pauli_ratio = 0.0;
  double magic_ratio = 0.0;
  bool pauli_optimal = false;
  bool magic_optimal = false;
  double wall_time_s = 0.0;
};

constexpr double kOptimalTolerance = 1e-9;

namespace detail {

// Seed-derivation tags; the chain below any instance seed is fixed so that
// each record is reproducible in isolation.
enum SeedTag : std::uint64_t {
  kTagInstance = 1,
  kTagGraph = 2,
  kTagSigns = 3,
  kTagEnt = 4,
  kTagInit = 5,
  kTagPauli = 6,
  kTagMagic = 7,
};

inline void format_double(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

inline std::uint64_t instance_seed(std::uint64_t master_seed, int n, int instance_id) {
  return derive_seed(master_seed, detail::kTagInstance, static_cast<std::uint64_t>(n),
                     static_cast<std::uint64_t>(instance_id));
}

/// Everything shared by the (pattern, L) runs of one problem instance.
struct InstanceContext {
  int instance_id = 0;
  std::uint64_t seed = 0;
  Graph graph;
  double opt = 0.0;
  Coloring coloring;
  QubitAssignment assignment;
  Observable relaxed;
};

/// Optional external optimum table, lines of "n instance_id opt".
class OptTable {
 public:
  OptTable() = default;

  static OptTable load(const std::string& path) {
    OptTable t;
    std::ifstream is(path);
    if (!is) throw std::runtime_error("opt table: cannot open " + path);
    int n, id;
    double opt;
    while (is >> n >> id >> opt) t.values_[{n, id}] = opt;
    return t;
  }

  const double* find(int n, int id) const {
    auto it = values_.find({n, id});
    return it == values_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::pair<int, int>, double> values_;
};

/// Builds one instance: graph (re-drawing signs while a weighted optimum is
/// non-positive), exact or table-supplied optimum, coloring, assignment and
/// relaxed Hamiltonian.
inline InstanceContext make_instance(const RunConfig& cfg, int n, int instance_id,
                                     const OptTable* opts = nullptr) {
  InstanceContext ctx;
  ctx.instance_id = instance_id;
  ctx.seed = instance_seed(cfg.master_seed, n, instance_id);
  const Graph base =
      generate_regular_graph(n, cfg.degree, derive_seed(ctx.seed, detail::kTagGraph));

  constexpr int kMaxSignAttempts = 64;
  for (int attempt = 0;; ++attempt) {
    ctx.graph = cfg.weighted
                    ? assign_random_signs(base, derive_seed(ctx.seed, detail::kTagSigns,
                                                            static_cast<std::uint64_t>(attempt)))
                    : base;
    const double* external = opts ? opts->find(n, instance_id) : nullptr;
    if (external) {
      ctx.opt = *external;
    } else {
      if (n > 30)
        throw std::runtime_error("make_instance: n > 30 requires an external optimum table");
      ctx.opt = brute_force_max_cut(ctx.graph).value;
    }
    if (!cfg.weighted || ctx.opt > 0) break;
    if (attempt + 1 >= kMaxSignAttempts)
      throw std::runtime_error("make_instance: could not draw weights with a positive optimum");
    std::cerr << "[suite] n=" << n << " instance=" << instance_id
              << ": optimum <= 0 with drawn weights, re-drawing signs\n";
  }

  ctx.coloring = greedy_color(ctx.graph);
  ctx.assignment = assign_qubits(ctx.graph, ctx.coloring);
  ctx.relaxed = build_relaxed_hamiltonian(ctx.graph, ctx.assignment);
  return ctx;
}

/// Runs VQE plus both roundings for one (pattern, depth) cell. At L = 0 the
/// circuit has no entangler, so seeds are derived pattern-independently and
/// all patterns produce the same record values.
inline RunRecord compute_record(const InstanceContext& ctx, const RunConfig& cfg,
                                EntanglementPattern pattern, int L) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t pattern_key =
      L == 0 ? 0 : static_cast<std::uint64_t>(pattern) + 1;

  const AnsatzSpec spec =
      build_ansatz(pattern, L, ctx.assignment, ctx.graph,
                   derive_seed(ctx.seed, detail::kTagEnt, static_cast<std::uint64_t>(pattern)));

  VqeResult best;
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    const std::uint64_t init_seed =
        derive_seed(ctx.seed, detail::kTagInit, pattern_key, static_cast<std::uint64_t>(L),
                    static_cast<std::uint64_t>(restart));
    VqeResult r = run_vqe(spec, ctx.relaxed, random_params(spec.param_count(), init_seed),
                          cfg.sweeps);
    if (restart == 0 || r.energy > best.energy) best = std::move(r);
  }
  const StateVector state = prepare_state(spec, best.params);

  Rng pauli_rng(
      derive_seed(ctx.seed, detail::kTagPauli, pattern_key, static_cast<std::uint64_t>(L)));
  const RoundingReport pauli =
      pauli_round(state, ctx.assignment, ctx.graph, PauliRoundingMode::Shots(cfg.shots), pauli_rng);
  Rng magic_rng(
      derive_seed(ctx.seed, detail::kTagMagic, pattern_key, static_cast<std::uint64_t>(L)));
  const RoundingReport magic = magic_round(state, ctx.assignment, ctx.graph, cfg.shots, magic_rng);

  RunRecord rec;
  rec.instance_id = ctx.instance_id;
  rec.n = ctx.graph.n;
  rec.pattern = pattern;
  rec.L = L;
  rec.seed = ctx.seed;
  rec.relaxed_energy = best.energy;
  rec.opt = ctx.opt;
  rec.normalized_energy = best.energy / ctx.opt;
  rec.pauli_ratio = pauli.best_value / ctx.opt;
  rec.magic_ratio = magic.best_value / ctx.opt;
  rec.pauli_optimal = std::abs(rec.pauli_ratio - 1.0) <= kOptimalTolerance;
  rec.magic_optimal = std::abs(rec.magic_ratio - 1.0) <= kOptimalTolerance;
  rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

inline void validate_config(const RunConfig& cfg) {
  if (cfg.n_list.empty()) throw std::invalid_argument("config: n_list is empty");
  if (cfg.instances_per_n < 1) throw std::invalid_argument("config: instances_per_n must be >= 1");
  if (cfg.degree < 1) throw std::invalid_argument("config: degree must be >= 1");
  if (cfg.depths.empty()) throw std::invalid_argument("config: depths is empty");
  if (cfg.patterns.empty()) throw std::invalid_argument("config: patterns is empty");
  if (cfg.sweeps < 1) throw std::invalid_argument("config: sweeps must be >= 1");
  if (cfg.shots < 1) throw std::invalid_argument("config: shots must be >= 1");
  if (cfg.restarts < 1) throw std::invalid_argument("config: restarts must be >= 1");
  for (int L : cfg.depths)
    if (L < 0) throw std::invalid_argument("config: negative depth");
  for (int n : cfg.n_list) {
    if (n <= cfg.degree) throw std::invalid_argument("config: n must exceed degree");
    if ((static_cast<long long>(n) * cfg.degree) % 2 != 0)
      throw std::invalid_argument("config: n*degree must be even");
    if (n > 30 && cfg.opt_file.empty())
      throw std::invalid_argument("config: n > 30 requires opt_file with known optima");
  }
}

struct SuiteOutput {
  std::vector<RunRecord> records;
  nlohmann::json summary;
};

inline nlohmann::json summarize(const std::vector<RunRecord>& records);

/// Runs the whole configured sweep. Instances are built in parallel, then all
/// (instance, pattern, depth) cells in parallel; every task derives its RNG
/// streams from the instance seed, so the result set is independent of
/// scheduling. Records are sorted before return.
inline SuiteOutput run_suite(const RunConfig& cfg) {
  validate_config(cfg);
  OptTable opts;
  const bool have_opts = !cfg.opt_file.empty();
  if (have_opts) opts = OptTable::load(cfg.opt_file);

  std::vector<std::pair<int, int>> instance_keys;  // (n, instance_id)
  for (int n : cfg.n_list)
    for (int i = 0; i < cfg.instances_per_n; ++i) instance_keys.emplace_back(n, i);

  std::vector<InstanceContext> contexts(instance_keys.size());
  detail::parallel_for(instance_keys.size(), cfg.jobs, [&](std::size_t i) {
    contexts[i] = make_instance(cfg, instance_keys[i].first, instance_keys[i].second,
                                have_opts ? &opts : nullptr);
  });

  struct Cell {
    std::size_t context;
    EntanglementPattern pattern;
    int L;
  };
  std::vector<Cell> cells;
  for (std::size_t c = 0; c < contexts.size(); ++c)
    for (EntanglementPattern p : cfg.patterns)
      for (int L : cfg.depths) cells.push_back({c, p, L});

  std::vector<RunRecord> records(cells.size());
  detail::parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
    records[i] = compute_record(contexts[cells[i].context], cfg, cells[i].pattern, cells[i].L);
  });

  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    if (a.pattern != b.pattern) return static_cast<int>(a.pattern) < static_cast<int>(b.pattern);
    return a.L < b.L;
  });
  nlohmann::json summary = summarize(records);
  return SuiteOutput{std::move(records), std::move(summary)};
}

/// Per (n, pattern): mean metrics by depth plus cumulative optimal-instance
/// counts over growing depth budgets. A record counts as optimal when either
/// rounding reached the exact optimum.
inline nlohmann::json summarize(const std::vector<RunRecord>& records) {
  struct Agg {
    double energy_sum = 0, pauli_sum = 0, magic_sum = 0;
    int count = 0, optimal = 0;
  };
  // (n, pattern) -> depth -> aggregate; and instance -> set of optimal depths.
  std::map<std::pair<int, int>, std::map<int, Agg>> agg;
  std::map<std::pair<int, int>, std::map<int, std::set<int>>> optimal_depths;
  std::set<int> depths;
  for (const RunRecord& r : records) {
    const std::pair<int, int> key{r.n, static_cast<int>(r.pattern)};
    Agg& a = agg[key][r.L];
    a.energy_sum += r.normalized_energy;
    a.pauli_sum += r.pauli_ratio;
    a.magic_sum += r.magic_ratio;
    a.count += 1;
    depths.insert(r.L);
    if (r.pauli_optimal || r.magic_optimal) {
      a.optimal += 1;
      optimal_depths[key][r.instance_id].insert(r.L);
    }
  }

  nlohmann::json per_n = nlohmann::json::object();
  for (const auto& [key, by_depth] : agg) {
    const auto& [n, pattern_id] = key;
    nlohmann::json jp;
    nlohmann::json jd = nlohmann::json::object();
    for (const auto& [L, a] : by_depth) {
      jd[std::to_string(L)] = {{"mean_normalized_energy", a.energy_sum / a.count},
                               {"mean_pauli_ratio", a.pauli_sum / a.count},
                               {"mean_magic_ratio", a.magic_sum / a.count},
                               {"optimal_count", a.optimal},
                               {"records", a.count}};
    }
    jp["by_depth"] = std::move(jd);

    nlohmann::json jc = nlohmann::json::object();
    const auto it = optimal_depths.find(key);
    for (int budget : depths) {
      int count = 0;
      if (it != optimal_depths.end()) {
        for (const auto& [instance, ls] : it->second) {
          (void)instance;
          for (int l : ls)
            if (l <= budget) {
              ++count;
              break;
            }
        }
      }
      jc["L<=" + std::to_string(budget)] = count;
    }
    jp["cumulative_optimal"] = std::move(jc);

    per_n[std::to_string(n)][pattern_name(static_cast<EntanglementPattern>(pattern_id))] =
        std::move(jp);
  }

  nlohmann::json summary;
  summary["records"] = records.size();
  summary["per_n"] = std::move(per_n);
  return summary;
}

inline const char* records_csv_header() {
  return "instance_id,n,pattern,L,seed,relaxed_energy,opt,normalized_energy,pauli_ratio,"
         "magic_ratio,pauli_optimal,magic_optimal";
}

inline std::string record_to_csv(const RunRecord& r) {
  std::string line;
  line += std::to_string(r.instance_id);
  line += ',';
  line += std::to_string(r.n);
  line += ',';
  line += pattern_name(r.pattern);
  line += ',';
  line += std::to_string(r.L);
  line += ',';
  line += std::to_string(r.seed);
  line += ',';
  detail::format_double(line, r.relaxed_energy);
  line += ',';
  detail::format_double(line, r.opt);
  line += ',';
  detail::format_double(line, r.normalized_energy);
  line += ',';
  detail::format_double(line, r.pauli_ratio);
  line += ',';
  detail::format_double(line, r.magic_ratio);
  line += ',';
  line += r.pauli_optimal ? '1' : '0';
  line += ',';
  line += r.magic_optimal ? '1' : '0';
  return line;
}

inline std::vector<RunRecord> read_records_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_records_csv: cannot open " + path);
  std::string line;
  if (!std::getline(is, line) || line != records_csv_header())
    throw std::runtime_error("read_records_csv: unexpected header");
  std::vector<RunRecord> records;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 12) throw std::runtime_error("read_records_csv: bad row");
    RunRecord r;
    r.instance_id = std::stoi(fields[0]);
    r.n = std::stoi(fields[1]);
    r.pattern = pattern_from_name(fields[2]);
    r.L = std::stoi(fields[3]);
    r.seed = std::stoull(fields[4]);
    r.relaxed_energy = std::stod(fields[5]);
    r.opt = std::stod(fields[6]);
    r.normalized_energy = std::stod(fields[7]);
    r.pauli_ratio = std::stod(fields[8]);
    r.magic_ratio = std::stod(fields[9]);
    r.pauli_optimal = fields[10] == "1";
    r.magic_optimal = fields[11] == "1";
    records.push_back(r);
  }
  return records;
}

/// Writes records.csv, timings.csv, summary.json and the plot-ready figure
/// CSVs. Timing lives in its own file so records.csv is bit-reproducible for
/// a fixed master seed.
inline void emit_outputs(const std::vector<RunRecord>& records, const nlohmann::json& summary,
                         const std::string& output_dir) {
  if (records.empty()) throw std::invalid_argument("emit_outputs: no records");
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  const auto open = [&](const std::string& name) {
    std::ofstream os(fs::path(output_dir) / name);
    if (!os) throw std::runtime_error("emit_outputs: cannot write to " + output_dir + "/" + name);
    return os;
  };

  {
    auto os = open("records.csv");
    os << records_csv_header() << '\n';
    for (const RunRecord& r : records) os << record_to_csv(r) << '\n';
  }
  {
    auto os = open("timings.csv");
    os << "instance_id,n,pattern,L,wall_time_s\n";
    for (const RunRecord& r : records) {
      std::string line;
      line += std::to_string(r.instance_id);
      line += ',';
      line += std::to_string(r.n);
      line += ',';
      line += pattern_name(r.pattern);
      line += ',';
      line += std::to_string(r.L);
      line += ',';
      detail::format_double(line, r.wall_time_s);
      os << line << '\n';
    }
  }
  {
    auto os = open("summary.json");
    os << summary.dump(2) << '\n';
  }

  struct Stats {
    double min = 0, sum = 0, max = 0;
    int count = 0;
    void add(double v) {
      if (count == 0) {
        min = max = v;
      } else {
        min = std::min(min, v);
        max = std::max(max, v);
      }
      sum += v;
      ++count;
    }
  };
  std::map<std::tuple<int, int, int>, Stats> energy;            // (n, pattern, L)
  std::map<std::tuple<int, int, int, int>, Stats> ratio;        // (n, pattern, L, method)
  for (const RunRecord& r : records) {
    const int p = static_cast<int>(r.pattern);
    energy[{r.n, p, r.L}].add(r.normalized_energy);
    ratio[{r.n, p, r.L, 0}].add(r.pauli_ratio);
    ratio[{r.n, p, r.L, 1}].add(r.magic_ratio);
  }
  {
    auto os = open("fig_energy_vs_layers.csv");
    os << "n,pattern,L,min,mean,max\n";
    for (const auto& [key, st] : energy) {
      const auto& [n, p, L] = key;
      std::string line = std::to_string(n) + ',' +
                         pattern_name(static_cast<EntanglementPattern>(p)) + ',' +
                         std::to_string(L) + ',';
      detail::format_double(line, st.min);
      line += ',';
      detail::format_double(line, st.sum / st.count);
      line += ',';
      detail::format_double(line, st.max);
      os << line << '\n';
    }
  }
  {
    auto os = open("fig_ratio_vs_layers.csv");
    os << "n,pattern,L,method,min,mean,max\n";
    for (const auto& [key, st] : ratio) {
      const auto& [n, p, L, method] = key;
      std::string line = std::to_string(n) + ',' +
                         pattern_name(static_cast<EntanglementPattern>(p)) + ',' +
                         std::to_string(L) + ',' + (method == 0 ? "pauli" : "magic") + ',';
      detail::format_double(line, st.min);
      line += ',';
      detail::format_double(line, st.sum / st.count);
      line += ',';
      detail::format_double(line, st.max);
      os << line << '\n';
    }
  }
}

/// Config JSON uses the RunConfig field names; unknown keys are rejected.
inline RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "n_list") {
      cfg.n_list = value.get<std::vector<int>>();
    } else if (key == "instances_per_n") {
      cfg.instances_per_n = value.get<int>();
    } else if (key == "degree") {
      cfg.degree = value.get<int>();
    } else if (key == "weighted") {
      cfg.weighted = value.get<bool>();
    } else if (key == "depths") {
      cfg.depths = value.get<std::vector<int>>();
    } else if (key == "patterns") {
      cfg.patterns.clear();
      for (const auto& name : value) cfg.patterns.push_back(pattern_from_name(name));
    } else if (key == "sweeps") {
      cfg.sweeps = value.get<int>();
    } else if (key == "shots") {
      cfg.shots = value.get<int>();
    } else if (key == "restarts") {
      cfg.restarts = value.get<int>();
    } else if (key == "master_seed") {
      cfg.master_seed = value.get<std::uint64_t>();
    } else if (key == "output_dir") {
      cfg.output_dir = value.get<std::string>();
    } else if (key == "opt_file") {
      cfg.opt_file = value.get<std::string>();
    } else if (key == "jobs") {
      cfg.jobs = value.get<int>();
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  validate_config(cfg);
  return cfg;
}

inline nlohmann::json config_to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["n_list"] = cfg.n_list;
  j["instances_per_n"] = cfg.instances_per_n;
  j["degree"] = cfg.degree;
  j["weighted"] = cfg.weighted;
  j["depths"] = cfg.depths;
  std::vector<std::string> names;
  for (EntanglementPattern p : cfg.patterns) names.push_back(pattern_name(p));
  j["patterns"] = names;
  j["sweeps"] = cfg.sweeps;
  j["shots"] = cfg.shots;
  j["restarts"] = cfg.restarts;
  j["master_seed"] = cfg.master_seed;
  j["output_dir"] = cfg.output_dir;
  j["opt_file"] = cfg.opt_file;
  j["jobs"] = cfg.jobs;
  return j;
}

}  // namespace qrao
