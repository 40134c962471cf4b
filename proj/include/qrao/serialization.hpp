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

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qrao/encoding.hpp"
#include "qrao/observable.hpp"
#include "qrao/statevector.hpp"

namespace qrao {

/// {constant, terms: [{coeff, paulis: {"<qubit>": "X|Y|Z"}}]}
inline nlohmann::json observable_to_json(const Observable& o) {
  nlohmann::json j;
  j["constant"] = o.constant;
  j["terms"] = nlohmann::json::array();
  for (const PauliTerm& t : o.terms) {
    nlohmann::json jt;
    jt["coeff"] = t.coeff;
    nlohmann::json paulis = nlohmann::json::object();
    for (const auto& [q, axis] : t.paulis) paulis[std::to_string(q)] = std::string(1, axis_to_char(axis));
    jt["paulis"] = std::move(paulis);
    j["terms"].push_back(std::move(jt));
  }
  return j;
}

inline Observable observable_from_json(const nlohmann::json& j) {
  Observable o;
  o.constant = j.at("constant").get<double>();
  for (const auto& jt : j.at("terms")) {
    PauliTerm t;
    t.coeff = jt.at("coeff").get<double>();
    for (const auto& [key, val] : jt.at("paulis").items()) {
      const std::string axis = val.get<std::string>();
      if (axis.size() != 1) throw std::runtime_error("observable_from_json: bad axis string");
      t.paulis[std::stoi(key)] = axis_from_char(axis[0]);
    }
    if (t.paulis.empty()) throw std::runtime_error("observable_from_json: empty Pauli map");
    o.terms.push_back(std::move(t));
  }
  return o;
}

inline nlohmann::json assignment_to_json(const QubitAssignment& a) {
  nlohmann::json j;
  j["num_qubits"] = a.num_qubits;
  j["slots"] = nlohmann::json::array();
  for (const VertexSlot& s : a.slots)
    j["slots"].push_back({{"qubit", s.qubit}, {"axis", std::string(1, axis_to_char(s.axis))}});
  return j;
}

inline QubitAssignment assignment_from_json(const nlohmann::json& j) {
  QubitAssignment a;
  a.num_qubits = j.at("num_qubits").get<int>();
  for (const auto& js : j.at("slots")) {
    VertexSlot s;
    s.qubit = js.at("qubit").get<int>();
    const std::string axis = js.at("axis").get<std::string>();
    if (axis.size() != 1) throw std::runtime_error("assignment_from_json: bad axis string");
    s.axis = axis_from_char(axis[0]);
    a.slots.push_back(s);
  }
  return a;
}

/// A saved relaxed state: amplitudes plus the vertex assignment needed to
/// re-round it later.
inline void save_state(const std::string& path, const StateVector& s, const QubitAssignment& a) {
  nlohmann::json j;
  j["num_qubits"] = s.num_qubits;
  j["amplitudes"] = nlohmann::json::array();
  for (const Complex& amp : s.amps) j["amplitudes"].push_back({amp.real(), amp.imag()});
  j["assignment"] = assignment_to_json(a);
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_state: cannot open " + path);
  os << j.dump(2) << '\n';
}

inline std::pair<StateVector, QubitAssignment> load_state(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_state: cannot open " + path);
  nlohmann::json j;
  is >> j;
  StateVector s;
  s.num_qubits = j.at("num_qubits").get<int>();
  for (const auto& pair : j.at("amplitudes"))
    s.amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  if (s.amps.size() != (std::size_t{1} << s.num_qubits))
    throw std::runtime_error("load_state: amplitude count does not match qubit count");
  QubitAssignment a = assignment_from_json(j.at("assignment"));
  if (a.num_qubits != s.num_qubits)
    throw std::runtime_error("load_state: assignment qubit count mismatch");
  return {std::move(s), std::move(a)};
}

}  // namespace qrao
