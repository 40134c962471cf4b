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

#include "qrao/graph.hpp"
#include "qrao/observable.hpp"
#include "qrao/statevector.hpp"

namespace qrao {

struct VertexSlot {
  int qubit = -1;
  PauliAxis axis = PauliAxis::X;
};

/// Vertex -> (qubit, Pauli axis) map. A qubit carries at most three vertices,
/// with distinct axes filled in X, Y, Z order; adjacent vertices never share
/// a qubit because qubits are built inside color classes.
struct QubitAssignment {
  std::vector<VertexSlot> slots;  // indexed by vertex
  int num_qubits = 0;

  int num_vertices() const { return static_cast<int>(slots.size()); }

  /// Vertices grouped by qubit, each as (vertex, axis) in axis order.
  std::vector<std::vector<std::pair<int, PauliAxis>>> by_qubit() const {
    std::vector<std::vector<std::pair<int, PauliAxis>>> groups(num_qubits);
    for (int v = 0; v < num_vertices(); ++v) groups[slots[v].qubit].emplace_back(v, slots[v].axis);
    for (auto& g : groups)
      std::sort(g.begin(), g.end(),
                [](const auto& a, const auto& b) { return a.second < b.second; });
    return groups;
  }
};

/// Packs each color class into qubits, three vertices per qubit (ascending
/// vertex index), assigning axes X, Y, Z within a qubit.
inline QubitAssignment assign_qubits(const Graph& g, const Coloring& c) {
  if (!is_proper_coloring(g, c))
    throw std::invalid_argument("assign_qubits: coloring is not proper for this graph");

  std::map<int, std::vector<int>> classes;  // color -> vertices, ascending
  for (int v = 0; v < g.n; ++v) classes[c.colors[v]].push_back(v);

  QubitAssignment a;
  a.slots.assign(g.n, VertexSlot{});
  int qubit = 0;
  constexpr std::array<PauliAxis, 3> axis_order{PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
  for (const auto& [color, members] : classes) {
    (void)color;
    for (std::size_t i = 0; i < members.size(); i += 3) {
      for (std::size_t k = i; k < std::min(i + 3, members.size()); ++k)
        a.slots[members[k]] = VertexSlot{qubit, axis_order[k - i]};
      ++qubit;
    }
  }
  a.num_qubits = qubit;
  return a;
}

/// H = (1/2) sum_e w_e (I - 3 P_u P_v): constant (1/2) sum w_e, one two-qubit
/// term of coefficient -(3/2) w_e per edge. Its expectation on an encoded
/// classical state equals that state's cut value.
inline Observable build_relaxed_hamiltonian(const Graph& g, const QubitAssignment& a) {
  if (a.num_vertices() != g.n)
    throw std::invalid_argument("build_relaxed_hamiltonian: assignment does not cover the graph");
  Observable h;
  for (const Edge& e : g.edges) {
    const VertexSlot su = a.slots[e.u], sv = a.slots[e.v];
    if (su.qubit == sv.qubit)
      throw std::invalid_argument("build_relaxed_hamiltonian: edge endpoints share a qubit");
    h.constant += 0.5 * e.w;
    PauliTerm t;
    t.coeff = -1.5 * e.w;
    t.paulis[su.qubit] = su.axis;
    t.paulis[sv.qubit] = sv.axis;
    h.terms.push_back(std::move(t));
  }
  return h;
}

/// Diagonal baseline H = (1/2) sum_e w_e (I - Z_u Z_v), one qubit per vertex.
inline Observable build_diagonal_hamiltonian(const Graph& g) {
  Observable h;
  for (const Edge& e : g.edges) {
    h.constant += 0.5 * e.w;
    PauliTerm t;
    t.coeff = -0.5 * e.w;
    t.paulis[e.u] = PauliAxis::Z;
    t.paulis[e.v] = PauliAxis::Z;
    h.terms.push_back(std::move(t));
  }
  return h;
}

/// Pure single-qubit state with the given Bloch vector (must be unit norm):
/// amplitudes (cos(t/2), e^{i p} sin(t/2)) with t, p the polar angles.
inline std::array<Complex, 2> bloch_to_amplitudes(double bx, double by, double bz) {
  const double theta = std::acos(std::clamp(bz, -1.0, 1.0));
  const double phi = std::atan2(by, bx);
  return {Complex{std::cos(theta / 2), 0.0}, std::polar(std::sin(theta / 2), phi)};
}

/// Polar angles (theta, phi) of the Bloch vector encoding three bits,
/// ((-1)^{x_X}, (-1)^{x_Y}, (-1)^{x_Z}) / sqrt(3).
inline std::pair<double, double> qrac_bloch_angles(int bit_x, int bit_y, int bit_z) {
  const double r = 1.0 / std::sqrt(3.0);
  const double bx = (bit_x ? -r : r), by = (bit_y ? -r : r), bz = (bit_z ? -r : r);
  return {std::acos(std::clamp(bz, -1.0, 1.0)), std::atan2(by, bx)};
}

/// Product state encoding a classical bit vector: each qubit is the pure
/// state whose Bloch vector is ((-1)^{x_X}, (-1)^{x_Y}, (-1)^{x_Z})/sqrt(3)
/// over the bits of the vertices it carries. Axes with no vertex are padded
/// as if their bit were 0, so a qubit always holds a full three-bit code and
/// the cut-value identity of the relaxed Hamiltonian is exact.
inline StateVector encode_classical_state(const QubitAssignment& a,
                                          const std::vector<std::uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != a.num_vertices())
    throw std::invalid_argument("encode_classical_state: bit vector length mismatch");
  if (a.num_qubits < 1 || a.num_qubits > kMaxQubits)
    throw std::invalid_argument("encode_classical_state: qubit count out of range");

  std::vector<std::array<Complex, 2>> factors(a.num_qubits);
  {
    std::vector<std::array<int, 3>> qubit_bits(a.num_qubits, {0, 0, 0});
    for (int v = 0; v < a.num_vertices(); ++v)
      qubit_bits[a.slots[v].qubit][static_cast<int>(a.slots[v].axis)] = bits[v];
    const double r = 1.0 / std::sqrt(3.0);
    for (int q = 0; q < a.num_qubits; ++q) {
      const auto& b = qubit_bits[q];
      factors[q] = bloch_to_amplitudes(b[0] ? -r : r, b[1] ? -r : r, b[2] ? -r : r);
    }
  }

  StateVector s;
  s.num_qubits = a.num_qubits;
  s.amps.assign(std::size_t{1} << a.num_qubits, Complex{1.0, 0.0});
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    Complex amp{1.0, 0.0};
    for (int q = 0; q < a.num_qubits; ++q) amp *= factors[q][(idx >> q) & 1];
    s.amps[idx] = amp;
  }
  return s;
}

}  // namespace qrao
