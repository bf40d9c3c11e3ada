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
#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "qeet/determinants.hpp"
#include "qeet/pauli.hpp"

namespace qeet {

// ============================== QeeEncoding ==================================

/// Ordered bijection between the Q determinants of a particle-number sector
/// and the first Q computational basis states of a ceil(log2 Q)-qubit
/// register. Determinants are sorted ascending by diagonal energy (ties by
/// combined bit value), so |0...0> is the lowest-energy determinant. Basis
/// states Q..2^Nq-1 are unphysical padding.
struct QeeEncoding {
  SectorSpec sector;
  int n_spin_orbitals = 0;
  std::vector<SlaterDeterminant> determinants;  // index i -> |i>
  std::vector<double> diagonal_energies;        // aligned with determinants
  std::uint32_t n_qubits = 0;
  std::uint64_t q_physical = 0;
  double padding_penalty = 0.0;

  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits; }
  std::uint64_t padding_states() const { return dim() - q_physical; }

  /// Encoded indices of the physical basis states.
  std::vector<std::uint64_t> physical_indices() const {
    std::vector<std::uint64_t> idx(q_physical);
    std::iota(idx.begin(), idx.end(), std::uint64_t{0});
    return idx;
  }

  /// Text table, one line per index: `i  up_bits  down_bits  E_diag`.
  std::string table_text() const {
    std::ostringstream os;
    os.precision(17);
    for (std::uint64_t i = 0; i < q_physical; ++i)
      os << i << " " << determinants[i].up_bits << " "
         << determinants[i].down_bits << " " << diagonal_energies[i] << "\n";
    return os.str();
  }
};

/// Builds the energy-sorted encoding. The padding penalty defaults to the
/// maximum physical diagonal energy plus one hartree, which keeps the global
/// ground state of the encoded operator inside the physical block.
inline QeeEncoding build_encoding(
    const SpinOrbitalHamiltonian& h, const SectorSpec& sector,
    std::optional<double> padding_penalty = std::nullopt) {
  QeeEncoding enc;
  enc.sector = sector;
  enc.n_spin_orbitals = h.n_spin_orbitals();
  enc.determinants = enumerate_sector(h.n_spin_orbitals(), sector);

  const int half = h.n_spatial();
  std::vector<std::pair<double, std::uint64_t>> keys(enc.determinants.size());
  std::vector<double> energies(enc.determinants.size());
  for (std::size_t i = 0; i < enc.determinants.size(); ++i) {
    energies[i] = diagonal_energy(h, enc.determinants[i]);
    keys[i] = {energies[i], enc.determinants[i].combined(half)};
  }
  std::vector<std::size_t> order(enc.determinants.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  std::vector<SlaterDeterminant> sorted;
  sorted.reserve(order.size());
  enc.diagonal_energies.reserve(order.size());
  for (std::size_t i : order) {
    sorted.push_back(enc.determinants[i]);
    enc.diagonal_energies.push_back(energies[i]);
  }
  enc.determinants = std::move(sorted);

  enc.q_physical = enc.determinants.size();
  enc.n_qubits = 1;  // a single determinant still occupies one qubit
  while ((std::uint64_t{1} << enc.n_qubits) < enc.q_physical) ++enc.n_qubits;

  enc.padding_penalty =
      padding_penalty.value_or(enc.diagonal_energies.back() + 1.0);
  return enc;
}

/// Embeds a Q x Q sector matrix into the 2^Nq qubit space and expands it over
/// Pauli strings. Padded rows and columns are zero except for the padded
/// diagonal, which is set to `penalty` (the encoding's penalty by default;
/// pass 0.0 for observables that must vanish on unphysical states).
inline PauliOperator encode_sector_operator(
    const QeeEncoding& enc, const Eigen::MatrixXcd& sector_matrix,
    std::optional<double> penalty = std::nullopt) {
  const auto q = static_cast<Eigen::Index>(enc.q_physical);
  if (sector_matrix.rows() != q || sector_matrix.cols() != q)
    throw std::invalid_argument("sector matrix dimension mismatch");
  const auto dim = static_cast<Eigen::Index>(enc.dim());
  Eigen::MatrixXcd embedded = Eigen::MatrixXcd::Zero(dim, dim);
  embedded.topLeftCorner(q, q) = sector_matrix;
  const double pad = penalty.value_or(enc.padding_penalty);
  for (Eigen::Index i = q; i < dim; ++i) embedded(i, i) = pad;
  return matrix_to_pauli(embedded);
}

/// Dense embedding of a sector matrix, the exact operator the Pauli
/// expansion represents.
inline Eigen::MatrixXcd embed_sector_matrix(
    const QeeEncoding& enc, const Eigen::MatrixXcd& sector_matrix,
    std::optional<double> penalty = std::nullopt) {
  const auto q = static_cast<Eigen::Index>(enc.q_physical);
  if (sector_matrix.rows() != q || sector_matrix.cols() != q)
    throw std::invalid_argument("sector matrix dimension mismatch");
  const auto dim = static_cast<Eigen::Index>(enc.dim());
  Eigen::MatrixXcd embedded = Eigen::MatrixXcd::Zero(dim, dim);
  embedded.topLeftCorner(q, q) = sector_matrix;
  const double pad = penalty.value_or(enc.padding_penalty);
  for (Eigen::Index i = q; i < dim; ++i) embedded(i, i) = pad;
  return embedded;
}

/// The qubit Hamiltonian: sector matrix of H (core energy on the diagonal)
/// pushed through the encoding. Eigenvalues of the physical block equal the
/// sector spectrum exactly.
inline PauliOperator build_qubit_hamiltonian(const SpinOrbitalHamiltonian& h,
                                             const QeeEncoding& enc) {
  const Eigen::MatrixXd sector = sector_hamiltonian_matrix(h, enc.determinants);
  return encode_sector_operator(enc, sector.cast<complex>());
}

/// <f_i| a+_p a_q |f_j> over the encoded sector. Requires spin(p) == spin(q);
/// spin-mixing pairs leave the sector.
inline Eigen::MatrixXd excitation_matrix(const QeeEncoding& enc, int p, int q) {
  const int n = enc.n_spin_orbitals;
  if (p < 0 || p >= n || q < 0 || q >= n)
    throw std::invalid_argument("excitation orbital out of range");
  const int half = n / 2;
  if ((p < half) != (q < half))
    throw std::invalid_argument("excitation operator must conserve spin");
  return chain_sector_matrix({{p, true}, {q, false}}, enc.determinants, half);
}

}  // namespace qeet
