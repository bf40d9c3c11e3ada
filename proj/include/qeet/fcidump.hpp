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

#include <array>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "qeet/hamiltonian.hpp"

namespace qeet {

// =============================== FCIDUMP =====================================
//
// Standard integral-exchange text format: a namelist header
//   &FCI NORB=n,NELEC=e,MS2=s, ... &END      (terminator may also be "/")
// followed by lines `value i j k l` of chemist-notation spatial integrals
// (ij|kl) with 1-based indices. Lines with k=l=0 carry the one-body h_ij and
// the all-zero index line carries the core (nuclear repulsion) energy.

/// Spatial-orbital integrals as read from an FCIDUMP, kept in chemist
/// notation so the file can be re-emitted bit-stably.
struct FcidumpData {
  int norb = 0;
  int nelec = 0;
  int ms2 = 0;
  double core_energy = 0.0;
  // Canonical chemist keys, 0-based: one-body (i,j) with i >= j,
  // two-body (i,j,k,l) with i>=j, k>=l, (i,j) >= (k,l).
  std::map<std::array<int, 2>, double> one_body;
  std::map<std::array<int, 4>, double> two_body;

  /// Sector implied by NELEC/MS2.
  SectorSpec default_sector() const {
    return SectorSpec{(nelec + ms2) / 2, (nelec - ms2) / 2};
  }
};

namespace detail {

inline std::array<int, 2> canonical2(int i, int j) {
  return {std::max(i, j), std::min(i, j)};
}

inline std::array<int, 4> canonical4(int i, int j, int k, int l) {
  auto [a, b] = canonical2(i, j);
  auto [c, d] = canonical2(k, l);
  if (std::tie(a, b) < std::tie(c, d)) {
    std::swap(a, c);
    std::swap(b, d);
  }
  return {a, b, c, d};
}

/// Fortran floats may use D exponents.
inline double parse_fortran_double(std::string token, std::size_t line_no) {
  for (char& c : token)
    if (c == 'D' || c == 'd') c = 'E';
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid numeric value '" + token + "'", line_no);
  }
}

template <typename Map, typename Key>
void insert_checked(Map& map, const Key& key, double value,
                    std::size_t line_no) {
  auto [it, inserted] = map.try_emplace(key, value);
  if (!inserted && std::abs(it->second - value) > 1e-10)
    throw ParseError("conflicting duplicate integral entry", line_no);
}

}  // namespace detail

inline FcidumpData parse_fcidump_data(std::istream& in) {
  FcidumpData data;

  // Header: everything (possibly multi-line) up to &END or a bare "/".
  std::string header;
  std::string line;
  std::size_t line_no = 0;
  bool header_done = false;
  std::optional<int> norb, nelec;
  while (!header_done && std::getline(in, line)) {
    ++line_no;
    header += " " + line;
    if (header.find("&END") != std::string::npos ||
        header.find("$END") != std::string::npos ||
        line.find('/') != std::string::npos)
      header_done = true;
  }
  if (!header_done) throw ParseError("missing header terminator", line_no);
  if (header.find("&FCI") == std::string::npos)
    throw ParseError("missing &FCI marker in header", 1);

  auto header_int = [&](const std::string& key) -> std::optional<int> {
    const auto pos = header.find(key + "=");
    if (pos == std::string::npos) return std::nullopt;
    std::size_t p = pos + key.size() + 1;
    std::string digits;
    while (p < header.size() &&
           (std::isdigit(static_cast<unsigned char>(header[p])) ||
            header[p] == '-' || header[p] == '+'))
      digits += header[p++];
    if (digits.empty()) throw ParseError("malformed header field " + key, 1);
    return std::stoi(digits);
  };
  norb = header_int("NORB");
  nelec = header_int("NELEC");
  if (!norb || *norb <= 0) throw ParseError("header missing valid NORB", 1);
  if (!nelec || *nelec < 0) throw ParseError("header missing valid NELEC", 1);
  data.norb = *norb;
  data.nelec = *nelec;
  data.ms2 = header_int("MS2").value_or(0);

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string value_token;
    if (!(ls >> value_token)) continue;  // blank line
    const double value = detail::parse_fortran_double(value_token, line_no);
    int i, j, k, l;
    if (!(ls >> i >> j >> k >> l))
      throw ParseError("expected `value i j k l`", line_no);
    for (int idx : {i, j, k, l})
      if (idx < 0 || idx > data.norb)
        throw ParseError("orbital index out of range", line_no);
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      data.core_energy = value;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0)
        throw ParseError("one-body entry with a zero index", line_no);
      detail::insert_checked(data.one_body, detail::canonical2(i - 1, j - 1),
                             value, line_no);
    } else if (i == 0 || j == 0 || k == 0 || l == 0) {
      throw ParseError("two-body entry with a zero index", line_no);
    } else {
      detail::insert_checked(
          data.two_body, detail::canonical4(i - 1, j - 1, k - 1, l - 1), value,
          line_no);
    }
  }
  return data;
}

inline std::string write_fcidump(const FcidumpData& data) {
  std::ostringstream os;
  os.precision(17);
  os << "&FCI NORB=" << data.norb << ",NELEC=" << data.nelec
     << ",MS2=" << data.ms2 << ",\n&END\n";
  for (const auto& [key, value] : data.two_body)
    os << " " << value << " " << key[0] + 1 << " " << key[1] + 1 << " "
       << key[2] + 1 << " " << key[3] + 1 << "\n";
  for (const auto& [key, value] : data.one_body)
    os << " " << value << " " << key[0] + 1 << " " << key[1] + 1 << " 0 0\n";
  os << " " << data.core_energy << " 0 0 0 0\n";
  return os.str();
}

/// Expands spatial chemist integrals to the blocked spin-orbital tensors.
/// Chemist (ij|kl) becomes physicist <ik|v|jl> for every spin assignment that
/// conserves spin on each electron line. Integrals below the ingestion
/// threshold are dropped.
inline SpinOrbitalHamiltonian expand_to_spin_orbitals(const FcidumpData& data) {
  const int half = data.norb;
  SpinOrbitalHamiltonian h(2 * half, data.core_energy);

  for (const auto& [key, value] : data.one_body) {
    if (std::abs(value) < kIntegralDropTol) continue;
    const auto [i, j] = std::pair{key[0], key[1]};
    h.set_t(i, j, value);                // spin-up block
    h.set_t(i + half, j + half, value);  // spin-down block
  }

  for (const auto& [key, value] : data.two_body) {
    if (std::abs(value) < kIntegralDropTol) continue;
    const int i = key[0], j = key[1], k = key[2], l = key[3];
    // All 8 chemist index permutations of a real integral.
    const std::array<std::array<int, 4>, 8> perms{{{i, j, k, l},
                                                   {j, i, k, l},
                                                   {i, j, l, k},
                                                   {j, i, l, k},
                                                   {k, l, i, j},
                                                   {l, k, i, j},
                                                   {k, l, j, i},
                                                   {l, k, j, i}}};
    for (const auto& perm : perms) {
      const int a = perm[0], b = perm[1], c = perm[2], d = perm[3];
      // (ab|cd) -> <a c|v|b d>, spins sigma on (a,b), tau on (c,d).
      for (int sigma = 0; sigma < 2; ++sigma) {
        for (int tau = 0; tau < 2; ++tau) {
          const int off_s = sigma * half, off_t = tau * half;
          h.set_v(a + off_s, c + off_t, b + off_s, d + off_t, value);
        }
      }
    }
  }
  return h;
}

/// One-step convenience: text -> spin-orbital Hamiltonian.
inline SpinOrbitalHamiltonian parse_fcidump(std::istream& in) {
  return expand_to_spin_orbitals(parse_fcidump_data(in));
}

}  // namespace qeet
