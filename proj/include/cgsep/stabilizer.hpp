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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cgsep/errors.hpp"
#include "cgsep/graph.hpp"
#include "cgsep/pauli.hpp"
#include "cgsep/symplectic.hpp"

namespace cgsep {

namespace detail {

inline std::uint64_t qubit_bit(int n, int qubit1) { return std::uint64_t{1} << (n - qubit1); }

}  // namespace detail

/// Graph-state stabilizers: generator a is X_a prod_{b ~ a} Z_b with sign +1.
inline StabilizerGroup stabilizer_group(const GraphSpec& spec) {
  const int n = spec.n();
  detail::require(n <= kMaxSymplecticQubits, "graph too large for symplectic form");
  std::vector<SignedPauli> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    SignedPauli g;
    g.x = detail::qubit_bit(n, a);
    for (int b = 1; b <= n; ++b)
      if (b != a && spec.adjacent(a, b)) g.z |= detail::qubit_bit(n, b);
    gens.push_back(g);
  }
  return StabilizerGroup(n, std::move(gens));
}

/// Stabilizers of (|0...0> + |1...1>)/sqrt(2): X^n and Z_a Z_{a+1}.
inline StabilizerGroup ghz_stabilizer_group(int n) {
  detail::require(n >= 2 && n <= kMaxSymplecticQubits, "GHZ stabilizer needs 2 <= n <= 63");
  std::vector<SignedPauli> gens;
  SignedPauli all_x;
  all_x.x = (std::uint64_t{1} << n) - 1;
  gens.push_back(all_x);
  for (int a = 1; a < n; ++a) {
    SignedPauli zz;
    zz.z = detail::qubit_bit(n, a) | detail::qubit_bit(n, a + 1);
    gens.push_back(zz);
  }
  return StabilizerGroup(n, std::move(gens));
}

/// Stabilizers of |1...1>: -Z_a for every qubit.
inline StabilizerGroup all_ones_stabilizer_group(int n) {
  detail::require(n >= 1 && n <= kMaxSymplecticQubits, "qubit count out of range");
  std::vector<SignedPauli> gens;
  for (int a = 1; a <= n; ++a) gens.push_back({0, detail::qubit_bit(n, a), 2});
  return StabilizerGroup(n, std::move(gens));
}

/// Exact <P> on the stabilizer state of `g`: +-1 if +-P is in the group, else 0.
inline int stabilizer_expectation(const StabilizerGroup& g, const PauliString& p) {
  if (g.n() != p.n())
    throw ArgumentError("Pauli string has " + std::to_string(p.n()) + " qubits, group has " +
                        std::to_string(g.n()));
  const auto combo = g.solve(p.x_mask(), p.z_mask());
  if (!combo) return 0;
  const SignedPauli prod = g.product(*combo);
  if (prod.phase % 2 != 0)
    throw ConsistencyError("group element " + p.str() + " has a non-Hermitian phase");
  return prod.phase == 0 ? +1 : -1;
}

struct SupportEntry {
  FullIndex index;
  int sign = 0;  // +-1, or 0 when the pattern carries no signs

  friend bool operator==(const SupportEntry&, const SupportEntry&) = default;
};

/// Identity-free strings with nonzero expectation, sorted by packed key.
struct SupportPattern {
  int n = 0;
  bool has_signs = false;
  std::vector<SupportEntry> entries;

  std::size_t size() const { return entries.size(); }

  std::vector<std::uint64_t> keys() const {
    std::vector<std::uint64_t> k;
    k.reserve(entries.size());
    for (const auto& e : entries) k.push_back(e.index.key());
    return k;
  }
};

namespace detail {

inline FullIndex full_index_from_bits(int n, std::uint64_t x, std::uint64_t z) {
  std::vector<std::uint8_t> idx(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q) {
    const std::uint64_t b = qubit_bit(n, q);
    idx[static_cast<std::size_t>(q - 1)] = (x & b) ? ((z & b) ? 2 : 1) : 3;
  }
  return FullIndex(std::move(idx));
}

inline void sort_pattern(SupportPattern& pat) {
  std::sort(pat.entries.begin(), pat.entries.end(),
            [](const SupportEntry& a, const SupportEntry& b) { return a.index.key() < b.index.key(); });
}

/// Positions in `mask` get `in_op`, all others `out_op`, for every mask accepted by `keep`.
template <typename Keep>
SupportPattern subset_pattern(int n, Pauli in_op, Pauli out_op, Keep keep) {
  SupportPattern pat;
  pat.n = n;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!keep(std::popcount(mask))) continue;
    std::vector<std::uint8_t> idx(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q)
      idx[static_cast<std::size_t>(q - 1)] =
          static_cast<std::uint8_t>((mask & qubit_bit(n, q)) ? in_op : out_op);
    pat.entries.push_back({FullIndex(std::move(idx)), 0});
  }
  return pat;
}

}  // namespace detail

/// All 2^n group elements without identity factors, with their signs.
///
/// Walks the subset lattice in Gray-code order so each step is one row product.
inline SupportPattern full_weight_support(const StabilizerGroup& g) {
  const int n = g.n();
  detail::require(n <= 30, "support enumeration limited to 30 qubits");
  const std::uint64_t full = g.full_mask();
  SupportPattern pat;
  pat.n = n;
  pat.has_signs = true;

  SignedPauli acc;  // identity
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const int flip = std::countr_zero(step);
    acc = acc * g.generators()[static_cast<std::size_t>(flip)];
    if ((acc.x | acc.z) != full) continue;
    if (acc.phase % 2 != 0) throw ConsistencyError("group element with non-Hermitian phase");
    pat.entries.push_back({detail::full_index_from_bits(n, acc.x, acc.z), acc.phase == 0 ? +1 : -1});
  }
  detail::sort_pattern(pat);
  return pat;
}

/// Permutations of X^x Z^(n-x) for odd x, plus Y^n when n is even.
inline SupportPattern cg_nonzero_pattern(int n) {
  detail::require(n >= 2 && n <= 30, "pattern needs 2 <= n <= 30");
  auto pat = detail::subset_pattern(n, Pauli::X, Pauli::Z, [](int x) { return x % 2 == 1; });
  if (n % 2 == 0) pat.entries.push_back({FullIndex(std::vector<std::uint8_t>(n, 2)), 0});
  detail::sort_pattern(pat);
  return pat;
}

/// Permutations of Y^x X^(n-x) for even x (x = 0 included), plus Z^n when n is even.
inline SupportPattern ghz_nonzero_pattern(int n) {
  detail::require(n >= 2 && n <= 30, "pattern needs 2 <= n <= 30");
  auto pat = detail::subset_pattern(n, Pauli::Y, Pauli::X, [](int x) { return x % 2 == 0; });
  if (n % 2 == 0) pat.entries.push_back({FullIndex(std::vector<std::uint8_t>(n, 3)), 0});
  detail::sort_pattern(pat);
  return pat;
}

/// 2^(n-1) + s with s = 1 for even n, 0 for odd n.
inline std::uint64_t cg_support_count(int n) {
  detail::require(n >= 1 && n <= 63, "qubit count out of range");
  return (std::uint64_t{1} << (n - 1)) + (n % 2 == 0 ? 1 : 0);
}

inline double cg_norm_closed(int n) {
  detail::require(n >= 2, "closed-form norm needs n >= 2");
  return std::sqrt(static_cast<double>(cg_support_count(n)));
}

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// The binomial terms C(n, x) for odd x, followed by the single Y^n term (1)
/// when n is even.
inline std::vector<BigInt> permutation_terms(int n) {
  detail::require(n >= 2, "permutation count needs n >= 2");
  std::vector<BigInt> terms;
  for (int x = 1; x <= n; x += 2) terms.push_back(binomial(n, x));
  if (n % 2 == 0) terms.push_back(1);
  return terms;
}

inline BigInt permutation_count(int n) {
  BigInt total = 0;
  for (const auto& t : permutation_terms(n)) total += t;
  return total;
}

/// 2^(n-1) + s as an arbitrary-width integer.
inline BigInt permutation_closed_form(int n) {
  detail::require(n >= 2, "permutation count needs n >= 2");
  BigInt r = 1;
  r <<= (n - 1);
  return r + (n % 2 == 0 ? 1 : 0);
}

}  // namespace cgsep
