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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qeet {

enum class GateKind { rx, ry, rz, hadamard, cnot };

/// One gate record. Rotations follow R_A(theta) = exp(-i theta A / 2).
struct Gate {
  GateKind kind;
  int target;
  int control = -1;     // cnot only
  double angle = 0.0;   // rotations only

  bool is_two_qubit() const { return kind == GateKind::cnot; }
  bool is_rotation() const {
    return kind == GateKind::rx || kind == GateKind::ry || kind == GateKind::rz;
  }
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  void check_qubit(int q) const {
    if (q < 0 || q >= n_qubits)
      throw std::invalid_argument("gate qubit index out of range");
  }
  void check_angle(double theta) const {
    if (!std::isfinite(theta))
      throw std::invalid_argument("gate angle must be finite");
  }

  Circuit& rx(int q, double theta) {
    check_qubit(q);
    check_angle(theta);
    gates.push_back({GateKind::rx, q, -1, theta});
    return *this;
  }
  Circuit& ry(int q, double theta) {
    check_qubit(q);
    check_angle(theta);
    gates.push_back({GateKind::ry, q, -1, theta});
    return *this;
  }
  Circuit& rz(int q, double theta) {
    check_qubit(q);
    check_angle(theta);
    gates.push_back({GateKind::rz, q, -1, theta});
    return *this;
  }
  Circuit& hadamard(int q) {
    check_qubit(q);
    gates.push_back({GateKind::hadamard, q});
    return *this;
  }
  Circuit& cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target)
      throw std::invalid_argument("cnot control equals target");
    gates.push_back({GateKind::cnot, target, control});
    return *this;
  }

  Circuit& append(const Circuit& other) {
    if (other.n_qubits != n_qubits)
      throw std::invalid_argument("circuit append: register size mismatch");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
  }

  int cnot_count() const {
    int c = 0;
    for (const auto& g : gates) c += g.is_two_qubit();
    return c;
  }
};

}  // namespace qeet
