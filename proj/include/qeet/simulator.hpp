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

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "qeet/circuit.hpp"
#include "qeet/pauli.hpp"

namespace qeet {

// =============================== NoiseModel ==================================

/// Per-qubit readout flip probabilities: e01 = P(read 1 | true 0),
/// e10 = P(read 0 | true 1).
struct ReadoutError {
  double e01 = 0.0;
  double e10 = 0.0;

  bool is_zero() const { return e01 == 0.0 && e10 == 0.0; }
};

/// Depolarizing noise after every gate plus tensored readout flips. The
/// defaults model a generic NISQ device; construct with none() for an ideal
/// machine.
struct NoiseModel {
  double p2 = 0.01;                    // two-qubit depolarizing per CNOT
  double p1 = 0.001;                   // single-qubit depolarizing per gate
  std::vector<ReadoutError> readout;   // empty means ideal readout

  static NoiseModel none() { return NoiseModel{0.0, 0.0, {}}; }

  static NoiseModel with_uniform_readout(double p2, double p1, int n_qubits,
                                         double e01, double e10) {
    NoiseModel m{p2, p1, {}};
    m.readout.assign(n_qubits, ReadoutError{e01, e10});
    return m;
  }

  bool gates_noiseless() const { return p2 == 0.0 && p1 == 0.0; }
  bool readout_noiseless() const {
    for (const auto& r : readout)
      if (!r.is_zero()) return false;
    return true;
  }

  void validate() const {
    auto in_range = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_range(p2) || !in_range(p1))
      throw ConfigError("depolarizing probabilities must be in [0,1]");
    for (const auto& r : readout)
      if (!in_range(r.e01) || !in_range(r.e10))
        throw ConfigError("readout flip probabilities must be in [0,1]");
  }
};

// ============================ statevector backend ============================

using StateVector = Eigen::VectorXcd;

namespace detail {

inline std::array<complex, 4> gate_matrix_2x2(const Gate& g) {
  const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
  switch (g.kind) {
    case GateKind::rx:
      return {complex{c, 0}, complex{0, -s}, complex{0, -s}, complex{c, 0}};
    case GateKind::ry:
      return {complex{c, 0}, complex{-s, 0}, complex{s, 0}, complex{c, 0}};
    case GateKind::rz:
      return {complex{c, -s}, complex{0, 0}, complex{0, 0}, complex{c, s}};
    case GateKind::hadamard: {
      const double r = 1.0 / std::sqrt(2.0);
      return {complex{r, 0}, complex{r, 0}, complex{r, 0}, complex{-r, 0}};
    }
    default:
      throw std::invalid_argument("not a single-qubit gate");
  }
}

inline void apply_single_qubit(StateVector& psi, std::uint32_t n, int qubit,
                               const std::array<complex, 4>& u) {
  const std::uint64_t bit = qubit_bit(n, qubit);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const complex a0 = psi[i], a1 = psi[i | bit];
    psi[i] = u[0] * a0 + u[1] * a1;
    psi[i | bit] = u[2] * a0 + u[3] * a1;
  }
}

inline void apply_cnot(StateVector& psi, std::uint32_t n, int control,
                       int target) {
  const std::uint64_t cbit = qubit_bit(n, control);
  const std::uint64_t tbit = qubit_bit(n, target);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < dim; ++i)
    if ((i & cbit) && !(i & tbit)) std::swap(psi[i], psi[i | tbit]);
}

}  // namespace detail

/// Exact noiseless evolution from a computational basis state.
inline StateVector run_statevector(const Circuit& c, std::uint64_t initial) {
  const auto n = static_cast<std::uint32_t>(c.n_qubits);
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (initial >= dim)
    throw std::invalid_argument("initial basis state out of range");
  StateVector psi = StateVector::Zero(dim);
  psi[initial] = 1.0;
  for (const auto& g : c.gates) {
    if (g.is_two_qubit())
      detail::apply_cnot(psi, n, g.control, g.target);
    else
      detail::apply_single_qubit(psi, n, g.target, detail::gate_matrix_2x2(g));
  }
  return psi;
}

// =========================== density-matrix backend ==========================

namespace detail {

inline void conjugate_single_qubit(Eigen::MatrixXcd& rho, std::uint32_t n,
                                   int qubit, const std::array<complex, 4>& u) {
  // rho -> U rho U+ via row then column transforms.
  const std::uint64_t bit = qubit_bit(n, qubit);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const complex a0 = rho(i, col), a1 = rho(i | bit, col);
      rho(i, col) = u[0] * a0 + u[1] * a1;
      rho(i | bit, col) = u[2] * a0 + u[3] * a1;
    }
  }
  for (std::uint64_t row = 0; row < dim; ++row) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      if (j & bit) continue;
      const complex b0 = rho(row, j), b1 = rho(row, j | bit);
      rho(row, j) = std::conj(u[0]) * b0 + std::conj(u[1]) * b1;
      rho(row, j | bit) = std::conj(u[2]) * b0 + std::conj(u[3]) * b1;
    }
  }
}

inline void conjugate_cnot(Eigen::MatrixXcd& rho, std::uint32_t n, int control,
                           int target) {
  const std::uint64_t cbit = qubit_bit(n, control);
  const std::uint64_t tbit = qubit_bit(n, target);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < dim; ++i)
    if ((i & cbit) && !(i & tbit)) rho.row(i).swap(rho.row(i | tbit));
  for (std::uint64_t j = 0; j < dim; ++j)
    if ((j & cbit) && !(j & tbit)) rho.col(j).swap(rho.col(j | tbit));
}

/// rho -> (1-p) rho + p (tr_qubits rho) x I/2^k on the given qubits, realized
/// through the Pauli-twirl identity (1/4^k) sum_P P rho P.
inline void depolarize(Eigen::MatrixXcd& rho, std::uint32_t n,
                       const std::vector<int>& qubits, double p) {
  if (p == 0.0) return;
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(dim, dim);
  const std::size_t k = qubits.size();
  const std::size_t combos = std::size_t{1} << (2 * k);
  for (std::size_t combo = 0; combo < combos; ++combo) {
    std::uint64_t x = 0, z = 0;
    for (std::size_t idx = 0; idx < k; ++idx) {
      const int letter = (combo >> (2 * idx)) & 3;  // I, X, Y, Z
      const std::uint64_t bit = qubit_bit(n, qubits[idx]);
      if (letter == 1 || letter == 2) x |= bit;
      if (letter == 2 || letter == 3) z |= bit;
    }
    const PauliString pauli(n, x, z);
    // P rho P: rows and columns permuted by the flip mask, phases combined.
    for (std::uint64_t col = 0; col < dim; ++col) {
      const complex col_phase = std::conj(pauli.basis_phase(col));
      for (std::uint64_t row = 0; row < dim; ++row)
        mixed(row ^ x, col ^ x) +=
            pauli.basis_phase(row) * rho(row, col) * col_phase;
    }
  }
  rho = (1.0 - p) * rho + (p / static_cast<double>(combos)) * mixed;
}

}  // namespace detail

inline constexpr int kDensityMatrixMaxQubits = 8;

/// Deterministic noisy evolution: each CNOT is followed by two-qubit
/// depolarizing with p2 on its pair, each single-qubit gate by depolarizing
/// with p1. With zero noise this reproduces the statevector outer product.
inline Eigen::MatrixXcd run_density_matrix(const Circuit& c,
                                           std::uint64_t initial,
                                           const NoiseModel& noise) {
  noise.validate();
  if (c.n_qubits > kDensityMatrixMaxQubits)
    throw ResourceError("density-matrix register limited to " +
                        std::to_string(kDensityMatrixMaxQubits) + " qubits");
  const auto n = static_cast<std::uint32_t>(c.n_qubits);
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (initial >= dim)
    throw std::invalid_argument("initial basis state out of range");
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  rho(initial, initial) = 1.0;
  for (const auto& g : c.gates) {
    if (g.is_two_qubit()) {
      detail::conjugate_cnot(rho, n, g.control, g.target);
      detail::depolarize(rho, n, {g.control, g.target}, noise.p2);
    } else {
      detail::conjugate_single_qubit(rho, n, g.target,
                                     detail::gate_matrix_2x2(g));
      detail::depolarize(rho, n, {g.target}, noise.p1);
    }
  }
  return rho;
}

// ============================= expectation values ============================

inline double expectation(const PauliOperator& op, const StateVector& psi) {
  if (!op.is_hermitian())
    throw std::invalid_argument("expectation requires a Hermitian operator");
  const std::uint64_t dim = psi.size();
  complex value = 0;
  for (const auto& [key, coeff] : op.terms()) {
    const PauliString p = op.string_at(key);
    complex term = 0;
    for (std::uint64_t i = 0; i < dim; ++i)
      term += std::conj(psi[i ^ p.x_mask]) * p.basis_phase(i) * psi[i];
    value += coeff * term;
  }
  return value.real();
}

inline double expectation(const PauliOperator& op, const Eigen::MatrixXcd& rho) {
  if (!op.is_hermitian())
    throw std::invalid_argument("expectation requires a Hermitian operator");
  const std::uint64_t dim = rho.rows();
  complex value = 0;
  for (const auto& [key, coeff] : op.terms()) {
    const PauliString p = op.string_at(key);
    complex term = 0;
    for (std::uint64_t j = 0; j < dim; ++j)
      term += p.basis_phase(j) * rho(j, j ^ p.x_mask);
    value += coeff * term;
  }
  return value.real();
}

}  // namespace qeet
