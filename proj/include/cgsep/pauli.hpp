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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgsep/errors.hpp"

namespace cgsep {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char to_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': case '_': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default: throw ArgumentError(std::string("invalid Pauli symbol '") + c + "'");
  }
}

/// Hermitian tensor product of single-qubit Paulis. No phase: eigenvalues are +-1.
///
/// Qubit 1 is the leftmost factor and maps to the most significant bit of a
/// computational-basis index, so `x_mask()` / `z_mask()` use bit (n - q) for
/// qubit q (1-based).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {
    detail::require(!ops_.empty(), "PauliString needs at least one qubit");
  }

  static PauliString identity(int n) {
    detail::require(n >= 1, "PauliString needs at least one qubit");
    return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I));
  }

  static PauliString from_string(std::string_view text) {
    std::vector<Pauli> ops;
    ops.reserve(text.size());
    for (char c : text) ops.push_back(pauli_from_char(c));
    return PauliString(std::move(ops));
  }

  int n() const { return static_cast<int>(ops_.size()); }
  Pauli operator[](int qubit0) const { return ops_[static_cast<std::size_t>(qubit0)]; }
  const std::vector<Pauli>& ops() const { return ops_; }

  /// Bits where the operator flips the basis state (X or Y).
  std::uint64_t x_mask() const {
    std::uint64_t m = 0;
    for (int q = 0; q < n(); ++q)
      if (ops_[q] == Pauli::X || ops_[q] == Pauli::Y) m |= bit(q);
    return m;
  }

  /// Bits where the operator applies a phase (Y or Z).
  std::uint64_t z_mask() const {
    std::uint64_t m = 0;
    for (int q = 0; q < n(); ++q)
      if (ops_[q] == Pauli::Z || ops_[q] == Pauli::Y) m |= bit(q);
    return m;
  }

  int y_count() const {
    int c = 0;
    for (Pauli p : ops_) c += (p == Pauli::Y);
    return c;
  }

  bool identity_free() const {
    for (Pauli p : ops_)
      if (p == Pauli::I) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    s.reserve(ops_.size());
    for (Pauli p : ops_) s.push_back(to_char(p));
    return s;
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::uint64_t bit(int qubit0) const { return std::uint64_t{1} << (n() - 1 - qubit0); }

  std::vector<Pauli> ops_;
};

/// Index tuple of a full correlation tensor entry; every position in {1,2,3}
/// (1 = X, 2 = Y, 3 = Z).
class FullIndex {
 public:
  FullIndex() = default;
  explicit FullIndex(std::vector<std::uint8_t> indices) : indices_(std::move(indices)) {
    detail::require(!indices_.empty(), "FullIndex needs at least one position");
    for (auto i : indices_)
      detail::require(i >= 1 && i <= 3, "FullIndex entries must be in {1,2,3}");
  }

  int n() const { return static_cast<int>(indices_.size()); }
  const std::vector<std::uint8_t>& indices() const { return indices_; }

  /// Base-3 packing with qubit 1 as the most significant digit (digit = index - 1).
  /// Ordering of keys equals lexicographic ordering of the index tuples.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (auto i : indices_) k = k * 3 + (i - 1u);
    return k;
  }

  static FullIndex from_key(std::uint64_t key, int n) {
    detail::require(n >= 1 && n <= 40, "FullIndex length out of range");
    std::vector<std::uint8_t> idx(static_cast<std::size_t>(n));
    for (int q = n - 1; q >= 0; --q) {
      idx[static_cast<std::size_t>(q)] = static_cast<std::uint8_t>(key % 3 + 1);
      key /= 3;
    }
    return FullIndex(std::move(idx));
  }

  friend bool operator==(const FullIndex&, const FullIndex&) = default;
  friend auto operator<=>(const FullIndex& a, const FullIndex& b) { return a.key() <=> b.key(); }

 private:
  std::vector<std::uint8_t> indices_;
};

/// 3^n, the number of identity-free strings on n qubits.
inline std::uint64_t full_index_count(int n) {
  detail::require(n >= 0 && n <= 40, "qubit count out of range for 3^n");
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c *= 3;
  return c;
}

/// 1 -> X, 2 -> Y, 3 -> Z, positionwise.
inline PauliString embed(const FullIndex& idx) {
  std::vector<Pauli> ops;
  ops.reserve(idx.indices().size());
  for (auto i : idx.indices()) ops.push_back(static_cast<Pauli>(i));
  return PauliString(std::move(ops));
}

/// Inverse of `embed` on identity-free strings.
inline FullIndex to_full_index(const PauliString& p) {
  detail::require(p.identity_free(), "string " + p.str() + " contains an identity factor");
  std::vector<std::uint8_t> idx;
  idx.reserve(p.ops().size());
  for (Pauli op : p.ops()) idx.push_back(static_cast<std::uint8_t>(op));
  return FullIndex(std::move(idx));
}

}  // namespace cgsep
