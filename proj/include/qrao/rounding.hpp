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
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qrao/encoding.hpp"
#include "qrao/graph.hpp"
#include "qrao/observable.hpp"
#include "qrao/random.hpp"
#include "qrao/statevector.hpp"

namespace qrao {

/// One of the four magic measurement bases. The basis states are the pure
/// states with Bloch vectors +- signs/sqrt(3); the sign patterns are
/// (+,+,+), (+,-,-), (-,+,-), (-,-,+) for indices 1..4.
struct MagicBasis {
  int index = 1;                  // 1..4
  std::array<int, 3> signs{1, 1, 1};  // per axis X, Y, Z
};

inline const std::array<MagicBasis, 4>& magic_bases() {
  static const std::array<MagicBasis, 4> bases{{
      {1, {+1, +1, +1}},
      {2, {+1, -1, -1}},
      {3, {-1, +1, -1}},
      {4, {-1, -1, +1}},
  }};
  return bases;
}

/// Unitary V mapping the basis pair onto the computational basis:
/// V mu+ V^dag = |0><0| (and mu- lands on |1><1| by orthogonality).
inline Matrix2 magic_basis_rotation(const MagicBasis& basis) {
  const double r = 1.0 / std::sqrt(3.0);
  const double theta = std::acos(std::clamp(basis.signs[2] * r, -1.0, 1.0));
  const double phi = std::atan2(basis.signs[1] * r, basis.signs[0] * r);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  // Rows of V are the conjugated basis-state kets.
  return {Complex{c, 0.0}, std::polar(s, -phi), Complex{-s, 0.0}, std::polar(c, -phi)};
}

/// Bits decoded from one qubit's measurement outcome in a magic basis:
/// outcome 0 reads the sign pattern (+ -> 0), outcome 1 its negation.
inline std::array<std::uint8_t, 3> decode_magic_outcome(const MagicBasis& basis, int outcome) {
  std::array<std::uint8_t, 3> bits{};
  for (int axis = 0; axis < 3; ++axis)
    bits[axis] = static_cast<std::uint8_t>(basis.signs[axis] > 0 ? outcome : 1 - outcome);
  return bits;
}

struct PauliRoundingMode {
  bool exact = true;
  int shots = 0;

  static PauliRoundingMode Exact() { return {true, 0}; }
  static PauliRoundingMode Shots(int s) {
    if (s < 1) throw std::invalid_argument("PauliRoundingMode: shots must be >= 1");
    return {false, s};
  }
};

enum class RoundingMethod { Pauli, Magic };

struct RoundingReport {
  std::vector<std::uint8_t> best_bits;
  double best_value = 0.0;
  std::vector<double> per_shot_values;  // magic rounding only
  RoundingMethod method = RoundingMethod::Pauli;
};

namespace detail {

/// Basis-change rotations: V X V^dag = Z resp. V Y V^dag = Z.
inline Matrix2 x_basis_rotation() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}};
}

inline Matrix2 y_basis_rotation() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex{r, 0}, Complex{0, -r}, Complex{r, 0}, Complex{0, r}};
}

}  // namespace detail

/// Decodes one bit per vertex from the sign of its assigned single-qubit
/// Pauli expectation. Exact mode evaluates the expectations analytically;
/// Shots mode estimates them from one X-, one Y- and one Z-basis sampling
/// pass of `shots` shots each, shared across vertices. A vanishing estimate
/// assigns the bit uniformly at random.
inline RoundingReport pauli_round(const StateVector& s, const QubitAssignment& a, const Graph& g,
                                  const PauliRoundingMode& mode, Rng& rng) {
  if (s.num_qubits != a.num_qubits)
    throw std::invalid_argument("pauli_round: state and assignment qubit counts differ");
  if (a.num_vertices() != g.n)
    throw std::invalid_argument("pauli_round: assignment does not cover the graph");

  std::vector<double> est(g.n, 0.0);
  if (mode.exact) {
    for (int v = 0; v < g.n; ++v) {
      Observable single;
      PauliTerm t;
      t.coeff = 1.0;
      t.paulis[a.slots[v].qubit] = a.slots[v].axis;
      single.terms.push_back(std::move(t));
      est[v] = expectation(s, single);
    }
  } else {
    // Empirical per-qubit means of (-1)^bit in each of the three bases.
    std::array<std::vector<double>, 3> mean;  // axis -> per-qubit mean
    const std::array<Matrix2, 3> rot{detail::x_basis_rotation(), detail::y_basis_rotation(),
                                     identity_matrix()};
    for (int axis = 0; axis < 3; ++axis) {
      const std::vector<Matrix2> rotations(static_cast<std::size_t>(s.num_qubits), rot[axis]);
      const auto samples = sample_product_basis(s, rotations, mode.shots, rng);
      mean[axis].assign(static_cast<std::size_t>(s.num_qubits), 0.0);
      for (std::uint64_t outcome : samples)
        for (int q = 0; q < s.num_qubits; ++q)
          mean[axis][q] += ((outcome >> q) & 1) ? -1.0 : 1.0;
      for (double& m : mean[axis]) m /= mode.shots;
    }
    for (int v = 0; v < g.n; ++v)
      est[v] = mean[static_cast<int>(a.slots[v].axis)][a.slots[v].qubit];
  }

  RoundingReport report;
  report.method = RoundingMethod::Pauli;
  report.best_bits.assign(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (est[v] > 0)
      report.best_bits[v] = 0;
    else if (est[v] < 0)
      report.best_bits[v] = 1;
    else
      report.best_bits[v] = static_cast<std::uint8_t>(rng.next_bit());
  }
  report.best_value = cut_value(g, report.best_bits);
  return report;
}

/// Per shot, draws one of the four magic bases uniformly for every qubit,
/// measures all qubits jointly in the rotated product basis, and decodes up
/// to three vertex bits per qubit. Keeps the best cut across shots. Shots are
/// processed sequentially, so extending the shot budget on the same RNG
/// stream can only improve the best value. Rotated distributions are cached
/// per distinct basis tuple.
inline RoundingReport magic_round(const StateVector& s, const QubitAssignment& a, const Graph& g,
                                  int shots, Rng& rng) {
  if (shots < 1) throw std::invalid_argument("magic_round: shots must be >= 1");
  if (s.num_qubits != a.num_qubits)
    throw std::invalid_argument("magic_round: state and assignment qubit counts differ");
  if (a.num_vertices() != g.n)
    throw std::invalid_argument("magic_round: assignment does not cover the graph");

  const int q = s.num_qubits;
  constexpr std::size_t kCacheCap = 1024;
  std::map<std::uint64_t, std::vector<double>> cumulative_cache;

  RoundingReport report;
  report.method = RoundingMethod::Magic;
  report.per_shot_values.reserve(static_cast<std::size_t>(shots));
  std::vector<int> basis_idx(static_cast<std::size_t>(q));
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.n), 0);

  for (int shot = 0; shot < shots; ++shot) {
    std::uint64_t key = 0;
    for (int i = 0; i < q; ++i) {
      basis_idx[i] = static_cast<int>(rng.next_u64() & 3);  // unbiased: 4 divides 2^64
      key = key * 4 + static_cast<std::uint64_t>(basis_idx[i]);
    }

    std::vector<double> uncached;
    const std::vector<double>* cumulative = nullptr;
    auto it = cumulative_cache.find(key);
    if (it != cumulative_cache.end()) {
      cumulative = &it->second;
    } else {
      StateVector rotated = s;
      for (int i = 0; i < q; ++i)
        apply_one_qubit(rotated, i, magic_basis_rotation(magic_bases()[basis_idx[i]]));
      std::vector<double> cum(rotated.dim());
      double total = 0.0;
      for (std::size_t j = 0; j < rotated.dim(); ++j) {
        total += std::norm(rotated.amps[j]);
        cum[j] = total;
      }
      if (cumulative_cache.size() < kCacheCap) {
        cumulative = &cumulative_cache.emplace(key, std::move(cum)).first->second;
      } else {
        uncached = std::move(cum);
        cumulative = &uncached;
      }
    }

    const double total = cumulative->back();
    const double r = rng.next_double() * total;
    auto pos = std::upper_bound(cumulative->begin(), cumulative->end(), r);
    std::uint64_t outcome = static_cast<std::uint64_t>(pos - cumulative->begin());
    if (outcome >= cumulative->size()) outcome = cumulative->size() - 1;

    for (int v = 0; v < g.n; ++v) {
      const VertexSlot slot = a.slots[v];
      const int m = static_cast<int>((outcome >> slot.qubit) & 1);
      bits[v] = decode_magic_outcome(magic_bases()[basis_idx[slot.qubit]],
                                     m)[static_cast<int>(slot.axis)];
    }
    const double value = cut_value(g, bits);
    report.per_shot_values.push_back(value);
    if (shot == 0 || value > report.best_value) {
      report.best_value = value;
      report.best_bits = bits;
    }
  }
  return report;
}

}  // namespace qrao
