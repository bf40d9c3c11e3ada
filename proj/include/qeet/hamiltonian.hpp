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

#include <algorithm>
#include <cmath>
#include <vector>

#include "qeet/common.hpp"

namespace qeet {

/// Electron counts per spin channel; fixes the Slater-determinant sector.
struct SectorSpec {
  int m_up = 0;
  int m_down = 0;

  friend bool operator==(const SectorSpec&, const SectorSpec&) = default;
};

// ========================= SpinOrbitalHamiltonian ============================

/// Second-quantized Hamiltonian over N spin orbitals:
///
///   H = core + sum_pq t[p,q] a+_p a_q
///            + 1/2 sum_pqrs v[p,q,r,s] a+_p a+_q a_s a_r
///
/// with v in physicist convention <pq|v|rs>. Spin orbitals are blocked:
/// 0..N/2-1 spin-up, N/2..N-1 spin-down, spatial orbital k appearing at k and
/// k + N/2. All tensors are real; instances are immutable once built and safe
/// to share across threads.
class SpinOrbitalHamiltonian {
 public:
  SpinOrbitalHamiltonian() = default;

  explicit SpinOrbitalHamiltonian(int n_spin_orbitals, double core_energy = 0.0)
      : n_(n_spin_orbitals),
        core_(core_energy),
        one_body_(static_cast<std::size_t>(n_) * n_, 0.0),
        two_body_(static_cast<std::size_t>(n_) * n_ * n_ * n_, 0.0) {
    if (n_ <= 0 || n_ % 2 != 0)
      throw std::invalid_argument(
          "spin-orbital count must be positive and even");
  }

  int n_spin_orbitals() const { return n_; }
  int n_spatial() const { return n_ / 2; }
  double core_energy() const { return core_; }
  void set_core_energy(double e) { core_ = e; }

  /// 0 for spin-up orbitals, 1 for spin-down.
  int spin(int p) const { return p < n_ / 2 ? 0 : 1; }

  double t(int p, int q) const { return one_body_[idx2(p, q)]; }
  double v(int p, int q, int r, int s) const {
    return two_body_[idx4(p, q, r, s)];
  }

  void set_t(int p, int q, double value) {
    one_body_[idx2(p, q)] = value;
    one_body_[idx2(q, p)] = value;
  }

  /// Stores <pq|v|rs> together with its symmetry partners
  /// <qp|v|sr>, <rs|v|pq>, <sr|v|qp> (real integrals).
  void set_v(int p, int q, int r, int s, double value) {
    two_body_[idx4(p, q, r, s)] = value;
    two_body_[idx4(q, p, s, r)] = value;
    two_body_[idx4(r, s, p, q)] = value;
    two_body_[idx4(s, r, q, p)] = value;
  }

  const std::vector<double>& one_body() const { return one_body_; }
  const std::vector<double>& two_body() const { return two_body_; }

  /// Checks hermiticity, two-body permutational symmetry and spin
  /// conservation; throws ParseError naming the first violation.
  void validate(double tol = 1e-12) const {
    for (int p = 0; p < n_; ++p) {
      for (int q = 0; q < n_; ++q) {
        if (std::abs(t(p, q) - t(q, p)) > tol)
          throw ParseError("one-body tensor not symmetric at (" +
                           std::to_string(p) + "," + std::to_string(q) + ")");
        if (spin(p) != spin(q) && std::abs(t(p, q)) > tol)
          throw ParseError("one-body tensor mixes spins at (" +
                           std::to_string(p) + "," + std::to_string(q) + ")");
      }
    }
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q)
        for (int r = 0; r < n_; ++r)
          for (int s = 0; s < n_; ++s) {
            const double val = v(p, q, r, s);
            if (val == 0.0) continue;
            if (spin(p) != spin(r) || spin(q) != spin(s)) {
              if (std::abs(val) > tol)
                throw ParseError("two-body tensor violates spin conservation");
              continue;
            }
            if (std::abs(val - v(q, p, s, r)) > tol ||
                std::abs(val - v(r, s, p, q)) > tol)
              throw ParseError("two-body tensor violates index symmetry");
          }
  }

  /// Direct-minus-exchange combination that recurs in diagonal energies and
  /// mean-field folds.
  double coulomb_minus_exchange(int p, int q) const {
    return v(p, q, p, q) - v(p, q, q, p);
  }

 private:
  std::size_t idx2(int p, int q) const {
    return static_cast<std::size_t>(p) * n_ + q;
  }
  std::size_t idx4(int p, int q, int r, int s) const {
    return ((static_cast<std::size_t>(p) * n_ + q) * n_ + r) * n_ + s;
  }

  int n_ = 0;
  double core_ = 0.0;
  std::vector<double> one_body_;
  std::vector<double> two_body_;
};

// ============================== frozen core ==================================

/// Removes spatial orbitals that stay doubly occupied, folding their
/// mean-field effect into the core energy and the one-body terms:
///
///   core' = core + sum_f t_ff + 1/2 sum_fg (<fg|v|fg> - <fg|v|gf>)
///   t'_pq = t_pq + sum_f (<pf|v|qf> - <pf|v|fq>)
///
/// with f, g running over the frozen spin orbitals. The sector shrinks by one
/// electron per spin channel per frozen spatial orbital.
inline std::pair<SpinOrbitalHamiltonian, SectorSpec> freeze_core(
    const SpinOrbitalHamiltonian& h, const SectorSpec& sector,
    const std::vector<int>& frozen_spatial) {
  const int half = h.n_spatial();
  std::vector<int> frozen = frozen_spatial;
  std::sort(frozen.begin(), frozen.end());
  frozen.erase(std::unique(frozen.begin(), frozen.end()), frozen.end());
  if (frozen.size() != frozen_spatial.size())
    throw std::invalid_argument("frozen orbital list contains duplicates");
  for (int f : frozen)
    if (f < 0 || f >= half)
      throw std::invalid_argument("frozen spatial orbital out of range");
  const int n_frozen = static_cast<int>(frozen.size());
  if (n_frozen > std::min(sector.m_up, sector.m_down))
    throw std::invalid_argument(
        "cannot freeze more orbitals than occupied electrons per channel");

  if (n_frozen == 0) return {h, sector};

  // Frozen spin orbitals (both channels) and the survivors' old indices.
  std::vector<int> frozen_spin;
  for (int f : frozen) frozen_spin.push_back(f);
  for (int f : frozen) frozen_spin.push_back(f + half);

  std::vector<bool> is_frozen_spatial(half, false);
  for (int f : frozen) is_frozen_spatial[f] = true;
  std::vector<int> kept;  // old spin-orbital index per new index
  for (int k = 0; k < half; ++k)
    if (!is_frozen_spatial[k]) kept.push_back(k);
  const int new_half = static_cast<int>(kept.size());
  for (int k = 0; k < half; ++k)
    if (!is_frozen_spatial[k]) kept.push_back(k + half);

  double core = h.core_energy();
  for (int f : frozen_spin) core += h.t(f, f);
  for (int f : frozen_spin)
    for (int g : frozen_spin) core += 0.5 * h.coulomb_minus_exchange(f, g);

  SpinOrbitalHamiltonian out(2 * new_half, core);
  const int n_new = 2 * new_half;
  for (int p = 0; p < n_new; ++p) {
    for (int q = 0; q < n_new; ++q) {
      const int op = kept[p], oq = kept[q];
      double tpq = h.t(op, oq);
      for (int f : frozen_spin) tpq += h.v(op, f, oq, f) - h.v(op, f, f, oq);
      if (tpq != 0.0) out.set_t(p, q, tpq);
    }
  }
  for (int p = 0; p < n_new; ++p)
    for (int q = 0; q < n_new; ++q)
      for (int r = 0; r < n_new; ++r)
        for (int s = 0; s < n_new; ++s) {
          const double val = h.v(kept[p], kept[q], kept[r], kept[s]);
          if (val != 0.0) out.set_v(p, q, r, s, val);
        }

  return {out, SectorSpec{sector.m_up - n_frozen, sector.m_down - n_frozen}};
}

}  // namespace qeet
