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

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qrao/experiment.hpp"

using namespace qrao;
using Catch::Approx;

namespace {

namespace fs = std::filesystem;

RunConfig tiny_config() {
  RunConfig cfg;
  cfg.n_list = {8};
  cfg.instances_per_n = 2;
  cfg.depths = {0, 1};
  cfg.patterns = {EntanglementPattern::Linear, EntanglementPattern::Random};
  cfg.sweeps = 3;
  cfg.shots = 64;
  cfg.master_seed = 2001;
  cfg.jobs = 2;
  return cfg;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("a one-cell suite on K4 finds the exact optimum") {
  RunConfig cfg;
  cfg.n_list = {4};
  cfg.instances_per_n = 1;
  cfg.depths = {0};
  cfg.patterns = {EntanglementPattern::Linear};
  cfg.sweeps = 3;
  cfg.shots = 32;
  cfg.master_seed = 7;
  cfg.jobs = 1;
  const SuiteOutput out = run_suite(cfg);
  REQUIRE(out.records.size() == 1);
  REQUIRE(out.records[0].opt == 4.0);  // K4 is the only 3-regular graph on 4 vertices
  REQUIRE(out.records[0].n == 4);
  REQUIRE(out.records[0].normalized_energy ==
          Approx(out.records[0].relaxed_energy / 4.0).margin(1e-12));
}

TEST_CASE("suite runs are deterministic for a fixed master seed") {
  const RunConfig cfg = tiny_config();
  const SuiteOutput a = run_suite(cfg);
  const SuiteOutput b = run_suite(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i)
    REQUIRE(record_to_csv(a.records[i]) == record_to_csv(b.records[i]));
  REQUIRE(a.summary == b.summary);
}

TEST_CASE("records at depth 0 are identical across patterns") {
  const RunConfig cfg = tiny_config();
  const SuiteOutput out = run_suite(cfg);
  for (int instance = 0; instance < cfg.instances_per_n; ++instance) {
    const RunRecord* linear = nullptr;
    const RunRecord* random = nullptr;
    for (const RunRecord& r : out.records) {
      if (r.instance_id != instance || r.L != 0) continue;
      if (r.pattern == EntanglementPattern::Linear) linear = &r;
      if (r.pattern == EntanglementPattern::Random) random = &r;
    }
    REQUIRE(linear != nullptr);
    REQUIRE(random != nullptr);
    REQUIRE(linear->relaxed_energy == random->relaxed_energy);
    REQUIRE(linear->pauli_ratio == random->pauli_ratio);
    REQUIRE(linear->magic_ratio == random->magic_ratio);
  }
}

TEST_CASE("each record is reproducible from its recorded seed") {
  const RunConfig cfg = tiny_config();
  const SuiteOutput out = run_suite(cfg);
  const RunRecord& r = out.records.back();
  REQUIRE(r.seed == instance_seed(cfg.master_seed, r.n, r.instance_id));
  const InstanceContext ctx = make_instance(cfg, r.n, r.instance_id);
  const RunRecord redo = compute_record(ctx, cfg, r.pattern, r.L);
  REQUIRE(redo.relaxed_energy == r.relaxed_energy);
  REQUIRE(redo.pauli_ratio == r.pauli_ratio);
  REQUIRE(redo.magic_ratio == r.magic_ratio);
}

TEST_CASE("cumulative optimal counts never decrease with the depth budget") {
  RunConfig cfg = tiny_config();
  cfg.n_list = {6, 8};
  cfg.depths = {0, 1, 2};
  cfg.sweeps = 4;
  const SuiteOutput out = run_suite(cfg);
  for (const auto& [n, patterns] : out.summary.at("per_n").items()) {
    (void)n;
    for (const auto& [pattern, data] : patterns.items()) {
      (void)pattern;
      const auto& cumulative = data.at("cumulative_optimal");
      REQUIRE(cumulative.at("L<=0").get<int>() <= cumulative.at("L<=1").get<int>());
      REQUIRE(cumulative.at("L<=1").get<int>() <= cumulative.at("L<=2").get<int>());
    }
  }
}

TEST_CASE("emitted outputs round-trip and aggregate consistently") {
  const RunConfig cfg = tiny_config();
  const SuiteOutput out = run_suite(cfg);
  TempDir dir("qrao_test_outputs");
  emit_outputs(out.records, out.summary, dir.path.string());

  const std::string csv = slurp(dir.path / "records.csv");
  REQUIRE(csv.rfind(records_csv_header(), 0) == 0);
  const std::size_t rows = static_cast<std::size_t>(
      std::count(csv.begin(), csv.end(), '\n'));
  REQUIRE(rows == out.records.size() + 1);  // header + one line per record

  // Re-reading the CSV and re-aggregating reproduces summary.json exactly.
  const auto reread = read_records_csv((dir.path / "records.csv").string());
  REQUIRE(reread.size() == out.records.size());
  REQUIRE(summarize(reread).dump(2) == slurp(dir.path / "summary.json").substr(
                                           0, slurp(dir.path / "summary.json").size() - 1));

  // Figure CSVs keep min <= mean <= max on every row.
  for (const char* name : {"fig_energy_vs_layers.csv", "fig_ratio_vs_layers.csv"}) {
    std::ifstream is(dir.path / name);
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
      std::stringstream ss(line);
      std::vector<std::string> fields;
      std::string f;
      while (std::getline(ss, f, ',')) fields.push_back(f);
      const double lo = std::stod(fields[fields.size() - 3]);
      const double mid = std::stod(fields[fields.size() - 2]);
      const double hi = std::stod(fields[fields.size() - 1]);
      REQUIRE(lo <= mid + 1e-12);
      REQUIRE(mid <= hi + 1e-12);
    }
  }
}

TEST_CASE("config JSON round-trips and validates") {
  RunConfig cfg = tiny_config();
  cfg.weighted = true;
  cfg.opt_file = "";
  const nlohmann::json j = config_to_json(cfg);
  const RunConfig back = config_from_json(j);
  REQUIRE(back.n_list == cfg.n_list);
  REQUIRE(back.instances_per_n == cfg.instances_per_n);
  REQUIRE(back.weighted == cfg.weighted);
  REQUIRE(back.depths == cfg.depths);
  REQUIRE(back.patterns == cfg.patterns);
  REQUIRE(back.master_seed == cfg.master_seed);

  nlohmann::json bad = j;
  bad["patterns"] = {"linear", "zigzag"};
  REQUIRE_THROWS_AS(config_from_json(bad), std::invalid_argument);
  nlohmann::json unknown = j;
  unknown["typo_key"] = 1;
  REQUIRE_THROWS_AS(config_from_json(unknown), std::invalid_argument);
  nlohmann::json too_big = j;
  too_big["n_list"] = {32};
  REQUIRE_THROWS_AS(config_from_json(too_big), std::invalid_argument);
  nlohmann::json odd = j;
  odd["n_list"] = {9};
  REQUIRE_THROWS_AS(config_from_json(odd), std::invalid_argument);
}

TEST_CASE("weighted suites keep the optimum positive") {
  RunConfig cfg = tiny_config();
  cfg.weighted = true;
  cfg.n_list = {6};
  cfg.instances_per_n = 4;
  cfg.depths = {0};
  cfg.patterns = {EntanglementPattern::Linear};
  const SuiteOutput out = run_suite(cfg);
  for (const RunRecord& r : out.records) {
    REQUIRE(r.opt > 0.0);
    REQUIRE(r.pauli_ratio <= 1.0 + 1e-12);
    REQUIRE(r.magic_ratio <= 1.0 + 1e-12);
  }
}
