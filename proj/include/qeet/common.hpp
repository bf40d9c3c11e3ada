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

#include <bit>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qeet {

using complex = std::complex<double>;

/// Energies are hartree internally; excitation reports convert with this.
inline constexpr double kHartreeToEv = 27.211386245988;

/// Coefficients with magnitude below this are pruned from operators.
inline constexpr double kCoeffPruneTol = 1e-14;

/// Integrals with magnitude below this are dropped on ingestion.
inline constexpr double kIntegralDropTol = 1e-12;

// ============================ error hierarchy ================================

/// Malformed input file. Carries a 1-based line number where applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid run configuration (bad flags, missing files, range violations).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem size exceeds a configured dense/memory limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure (divergence, singular matrix, empty post-selection).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ============================== bit helpers ==================================

/// Qubit j of an n-qubit register maps to bit (n-1-j) of a basis-state index,
/// so the text form of a bitstring (qubit 0 leftmost) is the index in binary.
inline std::uint64_t qubit_bit(std::uint32_t n_qubits, std::uint32_t qubit) {
  return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

inline int popcount64(std::uint64_t v) { return std::popcount(v); }

/// Parity of the number of set bits, as +1 / -1.
inline double parity_sign(std::uint64_t v) {
  return (std::popcount(v) & 1) ? -1.0 : 1.0;
}

inline std::string bits_to_string(std::uint64_t value, std::uint32_t n_bits) {
  std::string s(n_bits, '0');
  for (std::uint32_t j = 0; j < n_bits; ++j) {
    if (value >> (n_bits - 1 - j) & 1) s[j] = '1';
  }
  return s;
}

inline std::uint64_t string_to_bits(const std::string& s) {
  std::uint64_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError("invalid bitstring '" + s + "'");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return v;
}

// ================================= rng =======================================

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent deterministic substream for task `k` of a seeded run. Keeps
/// results reproducible regardless of evaluation order.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t k) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ k));
}

/// Uniform double in [0,1) from the raw generator, bypassing distribution
/// classes whose output is implementation-defined.
inline double canonical_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qeet
