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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrao/encoding.hpp"
#include "qrao/graph.hpp"
#include "qrao/observable.hpp"
#include "qrao/random.hpp"
#include "qrao/statevector.hpp"

namespace qrao {

enum class EntanglementPattern { Compatible, Linear, Random };

inline std::string pattern_name(EntanglementPattern p) {
  switch (p) {
    case EntanglementPattern::Compatible: return "compatible";
    case EntanglementPattern::Linear: return "linear";
    case EntanglementPattern::Random: return "random";
  }
  throw std::invalid_argument("pattern_name: bad pattern");
}

inline EntanglementPattern pattern_from_name(const std::string& s) {
  if (s == "compatible") return EntanglementPattern::Compatible;
  if (s == "linear") return EntanglementPattern::Linear;
  if (s == "random") return EntanglementPattern::Random;
  throw std::invalid_argument("pattern_from_name: expected compatible, linear or random");
}

/// Hardware-efficient ansatz: an initial Ry-Rz rotation layer on every qubit,
/// then `layers` repetitions of [CNOT entangler; Ry-Rz layer]. The entangler
/// uses the same pair list in every repetition.
struct AnsatzSpec {
  int num_qubits = 0;
  int layers = 0;
  std::vector<std::pair<int, int>> ent_pairs;  // (control, target), control < target

  int param_count() const { return 2 * num_qubits * (layers + 1); }
};

/// One CNOT pair per unordered qubit pair joined by at least one graph edge,
/// control = smaller index, sorted.
inline std::vector<std::pair<int, int>> compatible_pairs(const Graph& g,
                                                         const QubitAssignment& a) {
  if (a.num_vertices() != g.n)
    throw std::invalid_argument("compatible_pairs: assignment does not cover the graph");
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges) {
    const int qu = a.slots[e.u].qubit, qv = a.slots[e.v].qubit;
    if (qu == qv) throw std::invalid_argument("compatible_pairs: edge endpoints share a qubit");
    pairs.insert({std::min(qu, qv), std::max(qu, qv)});
  }
  return {pairs.begin(), pairs.end()};
}

inline AnsatzSpec build_ansatz(EntanglementPattern pattern, int layers, const QubitAssignment& a,
                               const Graph& g, std::uint64_t seed) {
  if (layers < 0) throw std::invalid_argument("build_ansatz: negative layer count");
  AnsatzSpec spec;
  spec.num_qubits = a.num_qubits;
  spec.layers = layers;
  switch (pattern) {
    case EntanglementPattern::Compatible: spec.ent_pairs = compatible_pairs(g, a); break;
    case EntanglementPattern::Linear:
      for (int i = 0; i + 1 < a.num_qubits; ++i) spec.ent_pairs.emplace_back(i, i + 1);
      break;
    case EntanglementPattern::Random: {
      // Same CNOT count as the compatible layout, pairs drawn uniformly
      // without replacement from all unordered qubit pairs.
      const std::size_t want = compatible_pairs(g, a).size();
      std::vector<std::pair<int, int>> all;
      for (int i = 0; i < a.num_qubits; ++i)
        for (int j = i + 1; j < a.num_qubits; ++j) all.emplace_back(i, j);
      if (want > all.size())
        throw std::invalid_argument("build_ansatz: random pair count exceeds available pairs");
      Rng rng(seed);
      for (std::size_t k = 0; k < want; ++k) {
        const std::size_t j = k + static_cast<std::size_t>(rng.next_below(all.size() - k));
        std::swap(all[k], all[j]);
      }
      all.resize(want);
      std::sort(all.begin(), all.end());
      spec.ent_pairs = std::move(all);
      break;
    }
  }
  return spec;
}

/// Parameter layout: layer-major, then qubit, then (Ry, Rz).
inline StateVector prepare_state(const AnsatzSpec& spec, const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != spec.param_count())
    throw std::invalid_argument("prepare_state: parameter vector length mismatch");
  StateVector s = init_zero(spec.num_qubits);
  const int q = spec.num_qubits;
  auto rotation_layer = [&](int layer) {
    const std::size_t off = static_cast<std::size_t>(layer) * 2 * q;
    for (int i = 0; i < q; ++i) {
      apply_one_qubit(s, i, ry_matrix(params[off + 2 * i]));
      apply_one_qubit(s, i, rz_matrix(params[off + 2 * i + 1]));
    }
  };
  rotation_layer(0);
  for (int l = 1; l <= spec.layers; ++l) {
    for (const auto& [c, t] : spec.ent_pairs) apply_cnot(s, c, t);
    rotation_layer(l);
  }
  return s;
}

/// Depth-0 parameters whose prepared state equals encode_classical_state(bits)
/// up to global phase: per qubit, Ry = polar angle, Rz = azimuth of the
/// three-bit Bloch vector.
inline std::vector<double> product_state_params(const QubitAssignment& a,
                                                const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != a.num_vertices())
    throw std::invalid_argument("product_state_params: bit vector length mismatch");
  std::vector<std::array<int, 3>> qubit_bits(a.num_qubits, {0, 0, 0});
  for (int v = 0; v < a.num_vertices(); ++v)
    qubit_bits[a.slots[v].qubit][static_cast<int>(a.slots[v].axis)] = bits[v];
  std::vector<double> params(2 * static_cast<std::size_t>(a.num_qubits), 0.0);
  for (int q = 0; q < a.num_qubits; ++q) {
    const auto [theta, phi] = qrac_bloch_angles(qubit_bits[q][0], qubit_bits[q][1], qubit_bits[q][2]);
    params[2 * q] = theta;
    params[2 * q + 1] = phi;
  }
  return params;
}

inline std::vector<double> random_params(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> p(static_cast<std::size_t>(count));
  for (double& x : p) x = rng.next_double() * 2 * std::numbers::pi;
  return p;
}

struct NftResult {
  std::vector<double> params;
  double value = 0.0;               // minimized objective at the final params
  std::vector<double> trace;        // objective after each sweep
};

/// Called after each single-parameter update with (parameter index, current
/// objective value).
using NftObserver = std::function<void(int, double)>;

/// Sequential single-parameter minimization. With Ry/Rz generators the exact
/// objective restricted to one angle is E(t) = a cos(t - b) + c; two shifted
/// evaluations at t0 +- pi/2 plus the known current value determine (a, b, c),
/// and the parameter jumps to the global argmin b + pi. Each update therefore
/// costs two state preparations and can never increase the objective.
inline NftResult nft_optimize(const AnsatzSpec& spec, const Observable& objective,
                              std::vector<double> params, int sweeps,
                              const NftObserver& on_update = nullptr) {
  if (sweeps < 1) throw std::invalid_argument("nft_optimize: sweeps must be >= 1");
  const auto eval = [&](const std::vector<double>& p) {
    return expectation(prepare_state(spec, p), objective);
  };
  constexpr double kHalfPi = std::numbers::pi / 2;
  constexpr double kTwoPi = 2 * std::numbers::pi;

  NftResult result;
  result.params = std::move(params);
  double current = eval(result.params);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (int j = 0; j < spec.param_count(); ++j) {
      const double theta0 = result.params[j];
      result.params[j] = theta0 + kHalfPi;
      const double e_plus = eval(result.params);
      result.params[j] = theta0 - kHalfPi;
      const double e_minus = eval(result.params);
      const double c = (e_plus + e_minus) / 2;
      const double k = current - c;            // a cos(theta0 - b)
      const double ssin = (e_minus - e_plus) / 2;  // a sin(theta0 - b)
      const double amplitude = std::hypot(k, ssin);
      if (amplitude < 1e-12) {
        // Flat direction: keep the parameter where it was.
        result.params[j] = theta0;
      } else {
        const double b = theta0 - std::atan2(ssin, k);
        result.params[j] = std::fmod(b + std::numbers::pi, kTwoPi);
        if (result.params[j] < 0) result.params[j] += kTwoPi;
        current = c - amplitude;
      }
      if (on_update) on_update(j, current);
    }
    // Re-anchor on an exact evaluation so analytic chaining cannot drift.
    current = eval(result.params);
    result.trace.push_back(current);
  }
  result.value = current;
  return result;
}

/// Result of maximizing the relaxed energy; all values refer to the
/// un-negated relaxed Hamiltonian.
struct VqeResult {
  std::vector<double> params;
  double energy = 0.0;
  std::vector<double> trace;  // relaxed energy after each sweep, non-decreasing
};

/// Maximizes <H> by NFT-minimizing the negated observable.
inline VqeResult run_vqe(const AnsatzSpec& spec, const Observable& hamiltonian,
                         std::vector<double> init_params, int sweeps,
                         const NftObserver& on_update = nullptr) {
  NftResult r = nft_optimize(spec, hamiltonian.negated(), std::move(init_params), sweeps, on_update);
  VqeResult out;
  out.params = std::move(r.params);
  out.energy = -r.value;
  out.trace.reserve(r.trace.size());
  for (double v : r.trace) out.trace.push_back(-v);
  return out;
}

}  // namespace qrao
