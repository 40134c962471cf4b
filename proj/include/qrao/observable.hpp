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

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace qrao {

enum class PauliAxis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline char axis_to_char(PauliAxis a) {
  switch (a) {
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  throw std::invalid_argument("axis_to_char: bad axis");
}

inline PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'X': return PauliAxis::X;
    case 'Y': return PauliAxis::Y;
    case 'Z': return PauliAxis::Z;
    default: throw std::invalid_argument("axis_from_char: expected one of X, Y, Z");
  }
}

/// One weighted Pauli string; `paulis` maps qubit index to axis and is never
/// empty (identity weight belongs in Observable::constant).
struct PauliTerm {
  double coeff = 0.0;
  std::map<int, PauliAxis> paulis;
};

/// Weighted sum of Pauli strings plus an identity offset.
struct Observable {
  double constant = 0.0;
  std::vector<PauliTerm> terms;

  /// Largest qubit index touched by any term, or -1 for a constant observable.
  int max_qubit() const {
    int m = -1;
    for (const PauliTerm& t : terms)
      if (!t.paulis.empty()) m = std::max(m, t.paulis.rbegin()->first);
    return m;
  }

  Observable negated() const {
    Observable o = *this;
    o.constant = -o.constant;
    for (PauliTerm& t : o.terms) t.coeff = -t.coeff;
    return o;
  }
};

}  // namespace qrao
