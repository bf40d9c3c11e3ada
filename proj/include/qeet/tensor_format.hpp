// Copyright 2026 The qeet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>
#include <string>

#include "qeet/hamiltonian.hpp"

namespace qeet {

// =========================== tensor JSON format ==============================
//
// Direct input of spin-orbital tensors (e.g. effective Hamiltonians produced
// by an embedding pipeline):
//
//   {
//     "format": "qeet-hamiltonian",
//     "n_spin_orbitals": 4,
//     "core_energy": 0.0,
//     "one_body": [[...], ...],              // N x N, hartree
//     "two_body": [[p, q, r, s, value], ...] // sparse, physicist <pq|v|rs>
//   }
//
// Missing symmetry partners of each two-body entry are filled in; entries
// that conflict with an already-given partner, or violate hermiticity or spin
// conservation, are rejected.

inline SpinOrbitalHamiltonian parse_tensor_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  for (const char* key : {"n_spin_orbitals", "core_energy", "one_body",
                          "two_body"})
    if (!doc.contains(key))
      throw ParseError(std::string("missing key '") + key + "'");

  const int n = doc["n_spin_orbitals"].get<int>();
  if (n <= 0 || n % 2 != 0)
    throw ParseError("n_spin_orbitals must be positive and even");
  SpinOrbitalHamiltonian h(n, doc["core_energy"].get<double>());

  const auto& one = doc["one_body"];
  if (!one.is_array() || static_cast<int>(one.size()) != n)
    throw ParseError("one_body must be an NxN array");
  for (int p = 0; p < n; ++p) {
    if (!one[p].is_array() || static_cast<int>(one[p].size()) != n)
      throw ParseError("one_body must be an NxN array");
    for (int q = 0; q <= p; ++q) {
      const double a = one[p][q].get<double>();
      const double b = one[q][p].get<double>();
      if (std::abs(a - b) > 1e-12)
        throw ParseError("one_body is not symmetric at (" + std::to_string(p) +
                         "," + std::to_string(q) + ")");
      if (std::abs(a) >= kIntegralDropTol) h.set_t(p, q, a);
    }
  }

  for (const auto& entry : doc["two_body"]) {
    if (!entry.is_array() || entry.size() != 5)
      throw ParseError("two_body entries must be [p, q, r, s, value]");
    const int p = entry[0].get<int>(), q = entry[1].get<int>(),
              r = entry[2].get<int>(), s = entry[3].get<int>();
    const double value = entry[4].get<double>();
    for (int idx : {p, q, r, s})
      if (idx < 0 || idx >= n)
        throw ParseError("two_body index out of range");
    if (std::abs(value) < kIntegralDropTol) continue;
    const double existing = h.v(p, q, r, s);
    if (existing != 0.0 && std::abs(existing - value) > 1e-10)
      throw ParseError("conflicting two_body entries at (" +
                       std::to_string(p) + "," + std::to_string(q) + "," +
                       std::to_string(r) + "," + std::to_string(s) + ")");
    h.set_v(p, q, r, s, value);
  }

  h.validate();
  return h;
}

inline std::string write_tensor_json(const SpinOrbitalHamiltonian& h) {
  nlohmann::json doc;
  doc["format"] = "qeet-hamiltonian";
  doc["n_spin_orbitals"] = h.n_spin_orbitals();
  doc["core_energy"] = h.core_energy();
  const int n = h.n_spin_orbitals();
  nlohmann::json one = nlohmann::json::array();
  for (int p = 0; p < n; ++p) {
    nlohmann::json row = nlohmann::json::array();
    for (int q = 0; q < n; ++q) row.push_back(h.t(p, q));
    one.push_back(row);
  }
  doc["one_body"] = one;
  nlohmann::json two = nlohmann::json::array();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double value = h.v(p, q, r, s);
          if (value != 0.0) two.push_back({p, q, r, s, value});
        }
  doc["two_body"] = two;
  return doc.dump(1);
}

}  // namespace qeet
