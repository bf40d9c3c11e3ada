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
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qeet/common.hpp"

namespace qeet {

// ============================== PauliString ==================================

/// Pauli string over n qubits in symplectic form. Qubit j carries Y iff both
/// masks have its bit set, X iff only x_mask, Z iff only z_mask, I otherwise.
/// Mask bit (n-1-j) corresponds to qubit j, so masks align with basis-state
/// indices: applying the string to |i> flips exactly the x_mask bits of i.
///
/// Text form is the letter sequence with qubit 0 leftmost, e.g. "IIXY".
struct PauliString {
  std::uint32_t n_qubits = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  PauliString() = default;
  PauliString(std::uint32_t n, std::uint64_t x, std::uint64_t z)
      : n_qubits(n), x_mask(x), z_mask(z) {}

  static PauliString identity(std::uint32_t n) { return {n, 0, 0}; }

  static PauliString from_text(const std::string& text) {
    PauliString p;
    p.n_qubits = static_cast<std::uint32_t>(text.size());
    if (p.n_qubits == 0 || p.n_qubits > 63)
      throw ParseError("pauli string length must be in [1, 63]");
    for (std::uint32_t j = 0; j < p.n_qubits; ++j) {
      const std::uint64_t bit = qubit_bit(p.n_qubits, j);
      switch (text[j]) {
        case 'I':
          break;
        case 'X':
          p.x_mask |= bit;
          break;
        case 'Y':
          p.x_mask |= bit;
          p.z_mask |= bit;
          break;
        case 'Z':
          p.z_mask |= bit;
          break;
        default:
          throw ParseError("invalid pauli letter '" + std::string(1, text[j]) +
                           "' in \"" + text + "\"");
      }
    }
    return p;
  }

  char at(std::uint32_t qubit) const {
    const std::uint64_t bit = qubit_bit(n_qubits, qubit);
    const bool x = x_mask & bit, z = z_mask & bit;
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }

  std::string text() const {
    std::string s(n_qubits, 'I');
    for (std::uint32_t j = 0; j < n_qubits; ++j) s[j] = at(j);
    return s;
  }

  int weight() const { return popcount64(x_mask | z_mask); }
  int y_count() const { return popcount64(x_mask & z_mask); }
  bool is_identity() const { return x_mask == 0 && z_mask == 0; }

  /// X/Y support: the qubits this string flips in the computational basis.
  std::uint64_t flip_mask() const { return x_mask; }
  /// All non-identity positions.
  std::uint64_t support() const { return x_mask | z_mask; }

  bool commutes_with(const PauliString& o) const {
    return ((popcount64(x_mask & o.z_mask) + popcount64(z_mask & o.x_mask)) &
            1) == 0;
  }

  /// Per-qubit factors are equal or at least one is identity on every qubit.
  bool qubitwise_commutes_with(const PauliString& o) const {
    const std::uint64_t differ = (x_mask ^ o.x_mask) | (z_mask ^ o.z_mask);
    return (differ & support() & o.support()) == 0;
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_qubits == b.n_qubits && a.x_mask == b.x_mask &&
           a.z_mask == b.z_mask;
  }
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    return std::tie(a.n_qubits, a.x_mask, a.z_mask) <=>
           std::tie(b.n_qubits, b.x_mask, b.z_mask);
  }

  /// Action on a basis state: P|i> = phase(i) |i ^ x_mask> with
  /// phase(i) = i^{|x&z|} (-1)^{|z&i|}.
  complex basis_phase(std::uint64_t index) const {
    static constexpr complex kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int k = y_count() & 3;
    if (popcount64(z_mask & index) & 1) k = (k + 2) & 3;
    return kQuarter[k];
  }

  /// Dense 2^n x 2^n matrix (qubit 0 is the leading tensor factor).
  Eigen::MatrixXcd to_matrix() const {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col)
      m(col ^ x_mask, col) = basis_phase(col);
    return m;
  }
};

struct PauliProduct {
  complex phase;
  PauliString string;
};

/// Product a*b decomposed as phase * string, phase in {1, i, -1, -i}.
inline PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("pauli product: register size mismatch");
  PauliString r(a.n_qubits, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask);
  // With P(x,z) = i^{|x&z|} X^x Z^z: phases from recombining X^x Z^z factors.
  int k = popcount64(a.x_mask & a.z_mask) + popcount64(b.x_mask & b.z_mask) -
          popcount64(r.x_mask & r.z_mask) +
          2 * popcount64(a.z_mask & b.x_mask);
  k &= 3;
  static constexpr complex kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {kQuarter[k], r};
}

// ============================= PauliOperator =================================

/// Weighted sum of Pauli strings. Terms are keyed by (x_mask, z_mask) so the
/// iteration order, and hence every serialization, is deterministic.
class PauliOperator {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  using TermMap = std::map<Key, complex>;

  PauliOperator() = default;
  explicit PauliOperator(std::uint32_t n_qubits) : n_qubits_(n_qubits) {}

  static PauliOperator identity(std::uint32_t n, complex coeff = 1.0) {
    PauliOperator op(n);
    op.add_term(PauliString::identity(n), coeff);
    return op;
  }

  std::uint32_t n_qubits() const { return n_qubits_; }
  std::size_t n_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const PauliString& p, complex coeff) {
    if (p.n_qubits != n_qubits_)
      throw std::invalid_argument("operator term: register size mismatch");
    auto [it, inserted] = terms_.try_emplace({p.x_mask, p.z_mask}, coeff);
    if (!inserted) it->second += coeff;
  }

  complex coefficient(const PauliString& p) const {
    auto it = terms_.find({p.x_mask, p.z_mask});
    return it == terms_.end() ? complex{0, 0} : it->second;
  }

  /// Drop terms with |coefficient| below tol.
  void prune(double tol = kCoeffPruneTol) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) < tol)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  bool is_hermitian(double tol = 1e-12) const {
    for (const auto& [key, coeff] : terms_)
      if (std::abs(coeff.imag()) > tol) return false;
    return true;
  }

  PauliString string_at(const Key& key) const {
    return PauliString(n_qubits_, key.first, key.second);
  }

  PauliOperator& operator+=(const PauliOperator& o) {
    require_same_register(o);
    for (const auto& [key, coeff] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(key, coeff);
      if (!inserted) it->second += coeff;
    }
    return *this;
  }

  PauliOperator& operator*=(complex scale) {
    for (auto& [key, coeff] : terms_) coeff *= scale;
    return *this;
  }

  friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) {
    a += b;
    return a;
  }
  friend PauliOperator operator*(PauliOperator a, complex scale) {
    a *= scale;
    return a;
  }

  /// Operator product with full Pauli-algebra simplification.
  friend PauliOperator operator*(const PauliOperator& a,
                                 const PauliOperator& b) {
    a.require_same_register(b);
    PauliOperator out(a.n_qubits_);
    for (const auto& [ka, ca] : a.terms_) {
      const PauliString pa = a.string_at(ka);
      for (const auto& [kb, cb] : b.terms_) {
        const PauliProduct prod = multiply(pa, b.string_at(kb));
        out.add_term(prod.string, ca * cb * prod.phase);
      }
    }
    out.prune();
    return out;
  }

  /// Left-multiplication by a single string: P * this.
  PauliOperator left_multiplied(const PauliString& p) const {
    PauliOperator out(n_qubits_);
    for (const auto& [key, coeff] : terms_) {
      const PauliProduct prod = multiply(p, string_at(key));
      out.add_term(prod.string, coeff * prod.phase);
    }
    out.prune();
    return out;
  }

  Eigen::MatrixXcd to_matrix() const {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [key, coeff] : terms_) {
      const PauliString p = string_at(key);
      for (std::uint64_t col = 0; col < dim; ++col)
        m(col ^ p.x_mask, col) += coeff * p.basis_phase(col);
    }
    return m;
  }

  /// Exact expectation in a computational basis state; only diagonal (flip
  /// mask zero) terms contribute.
  double basis_state_expectation(std::uint64_t basis_index) const {
    complex value = 0;
    for (const auto& [key, coeff] : terms_) {
      if (key.first != 0) continue;
      value += coeff * parity_sign(key.second & basis_index);
    }
    return value.real();
  }

  /// One term per line, `coefficient string`. Real coefficients print bare;
  /// complex ones as re+imj.
  std::string to_text() const {
    std::ostringstream os;
    os.precision(17);
    for (const auto& [key, coeff] : terms_) {
      if (std::abs(coeff.imag()) < kCoeffPruneTol)
        os << coeff.real();
      else
        os << coeff.real() << (coeff.imag() < 0 ? "-" : "+")
           << std::abs(coeff.imag()) << "j";
      os << " " << string_at(key).text() << "\n";
    }
    return os.str();
  }

 private:
  void require_same_register(const PauliOperator& o) const {
    if (n_qubits_ != o.n_qubits_)
      throw std::invalid_argument("operator algebra: register size mismatch");
  }

  std::uint32_t n_qubits_ = 0;
  TermMap terms_;
};

// ============================ operator algebra ===============================

/// -(i/2)[H, P]. Terms of H that commute string-wise with P drop out; an
/// anticommuting term c*S contributes -i*c*(phase)*(S P).
inline PauliOperator commutator_half(const PauliOperator& h,
                                     const PauliString& p) {
  if (h.n_qubits() != p.n_qubits)
    throw std::invalid_argument("commutator: register size mismatch");
  PauliOperator out(h.n_qubits());
  const complex minus_i{0, -1};
  for (const auto& [key, coeff] : h.terms()) {
    const PauliString s = h.string_at(key);
    if (s.commutes_with(p)) continue;
    const PauliProduct prod = multiply(s, p);
    out.add_term(prod.string, minus_i * coeff * prod.phase);
  }
  out.prune();
  return out;
}

namespace detail {

inline void pauli_decompose_rec(const Eigen::MatrixXcd& m, std::uint32_t level,
                                std::uint32_t n, std::uint64_t x,
                                std::uint64_t z, PauliOperator& out) {
  if (m.isZero(0.0)) return;
  if (level == n) {
    const complex c = m(0, 0);
    if (std::abs(c) >= kCoeffPruneTol) out.add_term({n, x, z}, c);
    return;
  }
  const Eigen::Index half = m.rows() / 2;
  const auto a = m.topLeftCorner(half, half);
  const auto b = m.topRightCorner(half, half);
  const auto c = m.bottomLeftCorner(half, half);
  const auto d = m.bottomRightCorner(half, half);
  const std::uint64_t bit = qubit_bit(n, level);
  const complex i_unit{0, 1};
  pauli_decompose_rec((a + d) / 2, level + 1, n, x, z, out);           // I
  pauli_decompose_rec((b + c) / 2, level + 1, n, x | bit, z, out);     // X
  pauli_decompose_rec(i_unit * (b - c) / 2, level + 1, n, x | bit,
                      z | bit, out);                                   // Y
  pauli_decompose_rec((a - d) / 2, level + 1, n, x, z | bit, out);     // Z
}

}  // namespace detail

/// Expand a dense matrix over the Pauli basis: coefficients Tr(P m) / 2^n.
/// The reconstruction sum_P c_P P equals m up to the prune tolerance.
inline PauliOperator matrix_to_pauli(const Eigen::MatrixXcd& m) {
  const Eigen::Index dim = m.rows();
  if (dim != m.cols() || dim == 0 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument(
        "pauli expansion requires a square matrix of power-of-two size");
  std::uint32_t n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  PauliOperator out(n);
  detail::pauli_decompose_rec(m, 0, n, 0, 0, out);
  return out;
}

// ========================== measurement grouping =============================

/// A set of mutually qubit-wise-commuting terms plus the single-qubit
/// measurement basis that diagonalizes all of them ('Z' where unconstrained).
struct TermGroup {
  std::vector<std::pair<PauliString, complex>> terms;
  std::vector<char> basis;  // per qubit: 'X', 'Y' or 'Z'

  std::string basis_text() const { return std::string(basis.begin(), basis.end()); }
};

/// Greedy coloring into qubit-wise commuting groups, terms visited in
/// descending |coefficient| so dominant terms get first pick.
inline std::vector<TermGroup> group_commuting(const PauliOperator& op) {
  const std::uint32_t n = op.n_qubits();
  std::vector<std::pair<PauliString, complex>> terms;
  terms.reserve(op.n_terms());
  for (const auto& [key, coeff] : op.terms())
    terms.emplace_back(op.string_at(key), coeff);
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) {
                     return std::abs(a.second) > std::abs(b.second);
                   });

  std::vector<TermGroup> groups;
  for (const auto& term : terms) {
    TermGroup* home = nullptr;
    for (auto& g : groups) {
      bool fits = true;
      for (const auto& member : g.terms) {
        if (!term.first.qubitwise_commutes_with(member.first)) {
          fits = false;
          break;
        }
      }
      if (fits) {
        home = &g;
        break;
      }
    }
    if (!home) {
      groups.emplace_back();
      home = &groups.back();
      home->basis.assign(n, 'Z');
    }
    home->terms.push_back(term);
    for (std::uint32_t j = 0; j < n; ++j) {
      const char c = term.first.at(j);
      if (c != 'I') home->basis[j] = c;
    }
  }
  return groups;
}

}  // namespace qeet
