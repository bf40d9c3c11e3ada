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
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qeet/hamiltonian.hpp"

namespace qeet {

// =========================== SlaterDeterminant ===============================

/// Occupation bit patterns, one per spin channel. Spatial orbital k sits at
/// bit k of each pattern (orbital 0 is the least significant bit).
struct SlaterDeterminant {
  std::uint64_t up_bits = 0;
  std::uint64_t down_bits = 0;

  /// Global occupation pattern over all N spin orbitals: the spin-down block
  /// occupies the high bits.
  std::uint64_t combined(int n_spatial) const {
    return up_bits | (down_bits << n_spatial);
  }

  friend bool operator==(const SlaterDeterminant&,
                         const SlaterDeterminant&) = default;
};

namespace detail {

/// Next bit pattern with the same popcount (Gosper's hack).
inline std::uint64_t next_bit_permutation(std::uint64_t v) {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

inline std::uint64_t lowest_pattern(int k) {
  return (k == 0) ? 0 : ((std::uint64_t{1} << k) - 1);
}

inline std::vector<std::uint64_t> patterns(int n_bits, int k) {
  std::vector<std::uint64_t> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << n_bits;
  for (std::uint64_t v = lowest_pattern(k); v < limit;
       v = next_bit_permutation(v))
    out.push_back(v);
  return out;
}

}  // namespace detail

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < std::min(k, n - k); ++i)
    r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
  return r;
}

/// All determinants of the fixed-(m_up, m_down) sector, each exactly once, in
/// ascending combined-bit-value order.
inline std::vector<SlaterDeterminant> enumerate_sector(int n_spin_orbitals,
                                                       const SectorSpec& s) {
  const int half = n_spin_orbitals / 2;
  if (n_spin_orbitals <= 0 || n_spin_orbitals % 2 != 0)
    throw std::invalid_argument("spin-orbital count must be positive and even");
  if (s.m_up < 0 || s.m_down < 0 || s.m_up > half || s.m_down > half)
    throw std::invalid_argument("sector electron counts out of range");

  const auto ups = detail::patterns(half, s.m_up);
  const auto downs = detail::patterns(half, s.m_down);
  std::vector<SlaterDeterminant> out;
  out.reserve(ups.size() * downs.size());
  for (std::uint64_t d : downs)
    for (std::uint64_t u : ups) out.push_back({u, d});
  return out;
}

// ======================= second-quantized operators ==========================

/// a_p applied to a global occupation pattern. Returns false when the orbital
/// is empty; otherwise updates the pattern and accumulates the Fermionic sign
/// (-1)^{number of occupied orbitals below p}.
inline bool apply_annihilate(std::uint64_t& occ, int p, double& sign) {
  const std::uint64_t bit = std::uint64_t{1} << p;
  if (!(occ & bit)) return false;
  if (popcount64(occ & (bit - 1)) & 1) sign = -sign;
  occ ^= bit;
  return true;
}

inline bool apply_create(std::uint64_t& occ, int p, double& sign) {
  const std::uint64_t bit = std::uint64_t{1} << p;
  if (occ & bit) return false;
  if (popcount64(occ & (bit - 1)) & 1) sign = -sign;
  occ |= bit;
  return true;
}

/// One factor of a normal-ordered operator chain.
struct FermionOp {
  int orbital;
  bool creation;
};

/// Applies a chain right-to-left (the rightmost factor acts first). Returns
/// false when the result vanishes.
inline bool apply_chain(std::uint64_t& occ, double& sign,
                        const std::vector<FermionOp>& chain) {
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const bool ok = it->creation ? apply_create(occ, it->orbital, sign)
                                 : apply_annihilate(occ, it->orbital, sign);
    if (!ok) return false;
  }
  return true;
}

/// <f|H|f> : occupied one-body terms plus direct-minus-exchange pairs. The
/// core energy is included.
inline double diagonal_energy(const SpinOrbitalHamiltonian& h,
                              const SlaterDeterminant& det) {
  const int half = h.n_spatial();
  std::uint64_t occ = det.combined(half);
  std::vector<int> orbs;
  for (std::uint64_t rest = occ; rest;) {
    const int p = std::countr_zero(rest);
    orbs.push_back(p);
    rest &= rest - 1;
  }
  double e = h.core_energy();
  for (int p : orbs) e += h.t(p, p);
  for (int p : orbs)
    for (int q : orbs)
      if (p != q) e += 0.5 * h.coulomb_minus_exchange(p, q);
  return e;
}

namespace detail {

inline std::vector<int> occupied_list(std::uint64_t occ) {
  std::vector<int> orbs;
  while (occ) {
    orbs.push_back(std::countr_zero(occ));
    occ &= occ - 1;
  }
  return orbs;
}

/// Sign of a'_p a_q mapping pattern `from` onto pattern `to`.
inline double excitation_sign(std::uint64_t from, int p, int q) {
  double sign = 1.0;
  std::uint64_t occ = from;
  apply_annihilate(occ, q, sign);
  apply_create(occ, p, sign);
  return sign;
}

}  // namespace detail

/// <f_i|H|f_j> by excitation degree (Slater-Condon rules). Real symmetric.
inline double sector_matrix_element(const SpinOrbitalHamiltonian& h,
                                    const SlaterDeterminant& fi,
                                    const SlaterDeterminant& fj) {
  const int half = h.n_spatial();
  const std::uint64_t oi = fi.combined(half), oj = fj.combined(half);
  const std::uint64_t diff = oi ^ oj;
  const int degree = popcount64(diff) / 2;

  if (degree == 0) return diagonal_energy(h, fj);

  if (degree == 1) {
    const int p = std::countr_zero(diff & oi);  // created
    const int q = std::countr_zero(diff & oj);  // annihilated
    double value = h.t(p, q);
    for (int r : detail::occupied_list(oj & ~(std::uint64_t{1} << q)))
      value += h.v(p, r, q, r) - h.v(p, r, r, q);
    return detail::excitation_sign(oj, p, q) * value;
  }

  if (degree == 2) {
    const auto created = detail::occupied_list(diff & oi);
    const auto destroyed = detail::occupied_list(diff & oj);
    const int p1 = created[0], p2 = created[1];
    const int q1 = destroyed[0], q2 = destroyed[1];
    double sign = 1.0;
    std::uint64_t occ = oj;
    const std::vector<FermionOp> chain = {{p1, true},  //
                                          {p2, true},
                                          {q2, false},
                                          {q1, false}};
    if (!apply_chain(occ, sign, chain)) return 0.0;
    return sign * (h.v(p1, p2, q1, q2) - h.v(p1, p2, q2, q1));
  }

  return 0.0;
}

/// Dense Q x Q sector Hamiltonian over the given determinant list.
inline Eigen::MatrixXd sector_hamiltonian_matrix(
    const SpinOrbitalHamiltonian& h, const std::vector<SlaterDeterminant>& dets) {
  const Eigen::Index q = static_cast<Eigen::Index>(dets.size());
  Eigen::MatrixXd m(q, q);
  for (Eigen::Index i = 0; i < q; ++i) {
    m(i, i) = sector_matrix_element(h, dets[i], dets[i]);
    for (Eigen::Index j = 0; j < i; ++j) {
      const double value = sector_matrix_element(h, dets[i], dets[j]);
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  return m;
}

/// Sector matrix of an arbitrary creation/annihilation chain. Determinants
/// the chain maps outside the sector yield zero columns automatically since
/// the image pattern is not found in the index.
inline Eigen::MatrixXd chain_sector_matrix(
    const std::vector<FermionOp>& chain,
    const std::vector<SlaterDeterminant>& dets, int n_spatial) {
  std::unordered_map<std::uint64_t, Eigen::Index> index;
  index.reserve(dets.size());
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(dets.size()); ++i)
    index.emplace(dets[i].combined(n_spatial), i);

  const Eigen::Index q = static_cast<Eigen::Index>(dets.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(q, q);
  for (Eigen::Index j = 0; j < q; ++j) {
    std::uint64_t occ = dets[j].combined(n_spatial);
    double sign = 1.0;
    if (!apply_chain(occ, sign, chain)) continue;
    const auto it = index.find(occ);
    if (it == index.end()) continue;
    m(it->second, j) = sign;
  }
  return m;
}

}  // namespace qeet
