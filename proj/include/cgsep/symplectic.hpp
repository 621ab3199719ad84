// Copyright 2026 The cgsep Authors
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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgsep/errors.hpp"
#include "cgsep/pauli.hpp"

namespace cgsep {

inline constexpr int kMaxSymplecticQubits = 63;

/// i^phase times the Hermitian Pauli string with X-part `x` and Z-part `z`
/// (both bits set means Y). Bit layout matches PauliString::x_mask().
struct SignedPauli {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int phase = 0;  // exponent of i, in [0, 4)

  static SignedPauli from(const PauliString& p, int sign = +1) {
    detail::require(p.n() <= kMaxSymplecticQubits, "too many qubits for symplectic form");
    detail::require(sign == 1 || sign == -1, "sign must be +1 or -1");
    return {p.x_mask(), p.z_mask(), sign == 1 ? 0 : 2};
  }

  PauliString string(int n) const {
    std::vector<Pauli> ops(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      const std::uint64_t b = std::uint64_t{1} << (n - 1 - q);
      const bool xb = x & b, zb = z & b;
      ops[static_cast<std::size_t>(q)] = xb ? (zb ? Pauli::Y : Pauli::X) : (zb ? Pauli::Z : Pauli::I);
    }
    return PauliString(std::move(ops));
  }

  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

/// Product a*b with the i^{+-1} factors of single-qubit products folded into the phase.
inline SignedPauli operator*(const SignedPauli& a, const SignedPauli& b) {
  const std::uint64_t ax = a.x & ~a.z, ay = a.x & a.z, az = ~a.x & a.z;
  const std::uint64_t bx = b.x & ~b.z, by = b.x & b.z, bz = ~b.x & b.z;
  // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
  const std::uint64_t plus = (ax & by) | (ay & bz) | (az & bx);
  const std::uint64_t minus = (ax & bz) | (ay & bx) | (az & by);
  const int g = std::popcount(plus) - std::popcount(minus);
  return {a.x ^ b.x, a.z ^ b.z, ((a.phase + b.phase + g) % 4 + 4) % 4};
}

/// True when the two operators commute (symplectic product is 0 mod 2).
inline bool commute(const SignedPauli& a, const SignedPauli& b) {
  return std::popcount((a.x & b.z) ^ (a.z & b.x)) % 2 == 0;
}

/// n commuting, independent, Hermitian generators. Validated on construction;
/// also caches a GF(2) echelon form used for membership queries.
class StabilizerGroup {
 public:
  StabilizerGroup(int n, std::vector<SignedPauli> generators)
      : n_(n), generators_(std::move(generators)) {
    detail::require(n_ >= 1 && n_ <= kMaxSymplecticQubits, "stabilizer qubit count out of range");
    detail::require(static_cast<int>(generators_.size()) == n_,
                    "a stabilizer group on n qubits needs exactly n generators");
    const std::uint64_t mask = full_mask();
    for (const auto& g : generators_) {
      detail::require(((g.x | g.z) & ~mask) == 0, "generator acts outside the register");
      detail::require(g.phase == 0 || g.phase == 2, "generators must carry a +-1 sign");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        detail::require(commute(generators_[i], generators_[j]), "generators do not commute");
    build_echelon();
  }

  int n() const { return n_; }
  const std::vector<SignedPauli>& generators() const { return generators_; }
  std::uint64_t full_mask() const { return (std::uint64_t{1} << n_) - 1; }

  /// Subset of generators (bit j = generator j) whose product has the given
  /// X/Z parts, or nothing if no element of the group has that support.
  std::optional<std::uint64_t> solve(std::uint64_t x, std::uint64_t z) const {
    std::uint64_t combo = 0;
    for (const auto& row : echelon_) {
      const bool hit = row.pivot_in_x ? (x >> row.pivot_bit) & 1 : (z >> row.pivot_bit) & 1;
      if (hit) {
        x ^= row.x;
        z ^= row.z;
        combo ^= row.combo;
      }
    }
    if (x != 0 || z != 0) return std::nullopt;
    return combo;
  }

  /// Ordered product of the generators selected by `combo`.
  SignedPauli product(std::uint64_t combo) const {
    SignedPauli acc;
    for (int j = 0; j < n_; ++j)
      if ((combo >> j) & 1) acc = acc * generators_[static_cast<std::size_t>(j)];
    return acc;
  }

 private:
  struct EchelonRow {
    std::uint64_t x, z, combo;
    bool pivot_in_x;
    int pivot_bit;
  };

  void build_echelon() {
    for (int j = 0; j < n_; ++j) {
      const auto& g = generators_[static_cast<std::size_t>(j)];
      EchelonRow row{g.x, g.z, std::uint64_t{1} << j, true, 0};
      for (const auto& r : echelon_) {
        const bool hit = r.pivot_in_x ? (row.x >> r.pivot_bit) & 1 : (row.z >> r.pivot_bit) & 1;
        if (hit) {
          row.x ^= r.x;
          row.z ^= r.z;
          row.combo ^= r.combo;
        }
      }
      if (row.x != 0) {
        row.pivot_in_x = true;
        row.pivot_bit = std::countr_zero(row.x);
      } else if (row.z != 0) {
        row.pivot_in_x = false;
        row.pivot_bit = std::countr_zero(row.z);
      } else {
        throw ArgumentError("stabilizer generators are linearly dependent");
      }
      echelon_.push_back(row);
    }
  }

  int n_;
  std::vector<SignedPauli> generators_;
  std::vector<EchelonRow> echelon_;
};

}  // namespace cgsep
