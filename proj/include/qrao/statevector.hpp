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
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qrao/observable.hpp"
#include "qrao/random.hpp"

namespace qrao {

using Complex = std::complex<double>;

/// Dense statevector over q qubits. Qubit 0 is the least-significant bit of
/// the amplitude index.
struct StateVector {
  int num_qubits = 0;
  std::vector<Complex> amps;

  std::size_t dim() const { return amps.size(); }

  double norm_sq() const {
    double s = 0.0;
    for (const Complex& a : amps) s += std::norm(a);
    return s;
  }
};

/// Memory guard: 24 qubits of complex doubles is 256 MiB.
constexpr int kMaxQubits = 24;

/// |0...0> on q qubits.
inline StateVector init_zero(int q) {
  if (q < 1 || q > kMaxQubits) throw std::invalid_argument("init_zero: qubit count out of range");
  StateVector s;
  s.num_qubits = q;
  s.amps.assign(std::size_t{1} << q, Complex{0.0, 0.0});
  s.amps[0] = Complex{1.0, 0.0};
  return s;
}

/// Row-major 2x2 complex matrix.
struct Matrix2 {
  Complex m00, m01, m10, m11;
};

inline bool is_unitary(const Matrix2& u, double tol) {
  // U†U == I entrywise.
  const Complex c00 = std::conj(u.m00) * u.m00 + std::conj(u.m10) * u.m10;
  const Complex c01 = std::conj(u.m00) * u.m01 + std::conj(u.m10) * u.m11;
  const Complex c11 = std::conj(u.m01) * u.m01 + std::conj(u.m11) * u.m11;
  return std::abs(c00 - 1.0) <= tol && std::abs(c01) <= tol && std::abs(c11 - 1.0) <= tol;
}

inline Matrix2 identity_matrix() { return {1.0, 0.0, 0.0, 1.0}; }

/// Ry(t) = exp(-i t Y / 2).
inline Matrix2 ry_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
}

/// Rz(t) = exp(-i t Z / 2).
inline Matrix2 rz_matrix(double theta) {
  return {std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)};
}

struct Gate {
  enum class Kind { Ry, Rz, Cnot, OneQubit };
  Kind kind;
  int qubit = 0;    // target
  int qubit2 = -1;  // control for Cnot
  double angle = 0.0;
  Matrix2 u{};  // OneQubit only

  static Gate ry(int q, double theta) { return {Kind::Ry, q, -1, theta, {}}; }
  static Gate rz(int q, double theta) { return {Kind::Rz, q, -1, theta, {}}; }
  static Gate cnot(int control, int target) { return {Kind::Cnot, target, control, 0.0, {}}; }
  static Gate one_qubit(int q, const Matrix2& u) { return {Kind::OneQubit, q, -1, 0.0, u}; }
};

inline void apply_one_qubit(StateVector& s, int q, const Matrix2& u) {
  if (q < 0 || q >= s.num_qubits) throw std::out_of_range("apply_one_qubit: qubit out of range");
  const std::size_t step = std::size_t{1} << q;
  const std::size_t dim = s.dim();
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    for (std::size_t k = base; k < base + step; ++k) {
      const Complex a0 = s.amps[k];
      const Complex a1 = s.amps[k + step];
      s.amps[k] = u.m00 * a0 + u.m01 * a1;
      s.amps[k + step] = u.m10 * a0 + u.m11 * a1;
    }
  }
}

inline void apply_cnot(StateVector& s, int control, int target) {
  if (control < 0 || control >= s.num_qubits || target < 0 || target >= s.num_qubits)
    throw std::out_of_range("apply_cnot: qubit out of range");
  if (control == target) throw std::invalid_argument("apply_cnot: control equals target");
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & cmask) && !(i & tmask)) std::swap(s.amps[i], s.amps[i | tmask]);
}

inline void apply_gate(StateVector& s, const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::Ry: apply_one_qubit(s, g.qubit, ry_matrix(g.angle)); break;
    case Gate::Kind::Rz: apply_one_qubit(s, g.qubit, rz_matrix(g.angle)); break;
    case Gate::Kind::Cnot: apply_cnot(s, g.qubit2, g.qubit); break;
    case Gate::Kind::OneQubit: apply_one_qubit(s, g.qubit, g.u); break;
  }
}

/// Exact expectation <s|O|s>. Each Pauli string is applied in place as a bit
/// permutation plus phase, so no operator matrix is ever formed.
inline double expectation(const StateVector& s, const Observable& o) {
  if (o.max_qubit() >= s.num_qubits)
    throw std::out_of_range("expectation: observable acts on absent qubit");
  const std::size_t dim = s.dim();
  double result = o.constant;
  for (const PauliTerm& term : o.terms) {
    std::size_t flip = 0, ymask = 0, zmask = 0;
    for (const auto& [q, axis] : term.paulis) {
      const std::size_t m = std::size_t{1} << q;
      switch (axis) {
        case PauliAxis::X: flip |= m; break;
        case PauliAxis::Y: flip |= m; ymask |= m; break;
        case PauliAxis::Z: zmask |= m; break;
      }
    }
    // P|j> = i^{ny} * (-1)^{popcount(j & (ymask|zmask))} |j ^ flip>
    const int ny = std::popcount(ymask);
    Complex ypow{1.0, 0.0};
    switch (ny & 3) {
      case 0: ypow = {1.0, 0.0}; break;
      case 1: ypow = {0.0, 1.0}; break;
      case 2: ypow = {-1.0, 0.0}; break;
      case 3: ypow = {0.0, -1.0}; break;
    }
    const std::size_t sign_mask = ymask | zmask;
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < dim; ++j) {
      const double sign = (std::popcount(j & sign_mask) & 1) ? -1.0 : 1.0;
      acc += std::conj(s.amps[j ^ flip]) * (sign * s.amps[j]);
    }
    acc *= ypow;
    if (std::abs(acc.imag()) > 1e-9)
      throw std::runtime_error("expectation: non-real Pauli expectation");
    result += term.coeff * acc.real();
  }
  return result;
}

/// Applies one basis-change rotation per qubit to a copy of s, then draws
/// `shots` full bitstrings from the rotated |amplitude|^2 distribution.
inline std::vector<std::uint64_t> sample_product_basis(const StateVector& s,
                                                       const std::vector<Matrix2>& rotations,
                                                       int shots, Rng& rng) {
  if (static_cast<int>(rotations.size()) != s.num_qubits)
    throw std::invalid_argument("sample_product_basis: one rotation per qubit required");
  for (const Matrix2& u : rotations)
    if (!is_unitary(u, 1e-9))
      throw std::invalid_argument("sample_product_basis: rotation is not unitary");

  StateVector rotated = s;
  for (int q = 0; q < s.num_qubits; ++q) apply_one_qubit(rotated, q, rotations[q]);

  std::vector<double> cumulative(rotated.dim());
  double total = 0.0;
  for (std::size_t i = 0; i < rotated.dim(); ++i) {
    total += std::norm(rotated.amps[i]);
    cumulative[i] = total;
  }

  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(shots));
  for (int k = 0; k < shots; ++k) {
    const double r = rng.next_double() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx >= cumulative.size()) idx = cumulative.size() - 1;
    out.push_back(static_cast<std::uint64_t>(idx));
  }
  return out;
}

}  // namespace qrao
