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
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "cgsep/errors.hpp"
#include "cgsep/pauli.hpp"
#include "cgsep/stabilizer.hpp"
#include "cgsep/state.hpp"
#include "cgsep/state_factory.hpp"

namespace cgsep {

inline constexpr int kDefaultDenseLimit = 10;
inline constexpr const char* kDenseLimitEnv = "CGSEP_DENSE_LIMIT";

/// Dense-sweep qubit limit: $CGSEP_DENSE_LIMIT if set to a positive integer, else 10.
inline int default_dense_limit() {
  if (const char* v = std::getenv(kDenseLimitEnv)) {
    char* end = nullptr;
    const long parsed = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && parsed > 0 && parsed <= kMaxStateQubits)
      return static_cast<int>(parsed);
  }
  return kDefaultDenseLimit;
}

/// Sparse full N-body correlation tensor: FullIndex key -> <sigma_i1 (x) ... (x) sigma_iN>.
/// Absent keys are zero. Entries are kept at full precision, never snapped.
class CorrelationTensor {
 public:
  CorrelationTensor(int n, double zero_tol) : n_(n), zero_tol_(zero_tol) {
    detail::require(n >= 1, "tensor needs at least one qubit");
    detail::require(zero_tol >= 0.0, "zero tolerance must be non-negative");
  }

  /// Stores `value` unless it is within zero_tol of 0.
  void insert(std::uint64_t key, double value) {
    if (std::abs(value) <= zero_tol_) return;
    if (std::abs(value) > 1.0 + 1e-9)
      throw ConsistencyError("correlation entry " + std::to_string(value) + " exceeds 1 in magnitude");
    entries_[key] = value;
  }

  int n() const { return n_; }
  double zero_tol() const { return zero_tol_; }
  const std::map<std::uint64_t, double>& entries() const { return entries_; }

  double value(const FullIndex& idx) const {
    detail::require(idx.n() == n_, "index length does not match tensor order");
    auto it = entries_.find(idx.key());
    return it == entries_.end() ? 0.0 : it->second;
  }

 private:
  int n_;
  double zero_tol_;
  std::map<std::uint64_t, double> entries_;
};

struct FullTensorOptions {
  double zero_tol = 1e-9;
  int dense_limit = default_dense_limit();
  /// Use exact stabilizer arithmetic when every ensemble member carries a group.
  bool use_fast_path = true;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

namespace detail {

struct PauliMasks {
  std::uint64_t x = 0, z = 0;
  int y_count = 0;
};

/// Masks of the identity-free string whose packed key is `key` (digit 0/1/2 = X/Y/Z).
inline PauliMasks masks_from_key(std::uint64_t key, int n) {
  PauliMasks m;
  for (int q = n; q >= 1; --q) {
    const auto digit = key % 3;
    key /= 3;
    const std::uint64_t b = qubit_bit(n, q);
    if (digit != 2) m.x |= b;
    if (digit != 0) m.z |= b;
    if (digit == 1) ++m.y_count;
  }
  return m;
}

inline double dense_entry(const MixedEnsemble& ens, std::uint64_t key) {
  const auto m = masks_from_key(key, ens.n());
  const Complex phase = i_power(m.y_count);
  double acc = 0.0;
  for (const auto& t : ens.terms()) {
    const Complex v = phase * pauli_overlap(t.state.amplitudes(), m.x, m.z);
    if (std::abs(v.imag()) > kImagTolerance)
      throw ConsistencyError("imaginary residue " + std::to_string(v.imag()) + " in correlation entry");
    acc += t.weight * v.real();
  }
  return acc;
}

inline CorrelationTensor dense_full_tensor(const MixedEnsemble& ens, const FullTensorOptions& opts) {
  const int n = ens.n();
  const std::uint64_t total = full_index_count(n);
  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<std::vector<std::pair<std::uint64_t, double>>> partial(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
    for (std::uint64_t key = begin; key < end; ++key) {
      const double v = dense_entry(ens, key);
      if (std::abs(v) > opts.zero_tol) partial[w].emplace_back(key, v);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  CorrelationTensor t(n, opts.zero_tol);
  for (const auto& part : partial)
    for (auto [key, v] : part) t.insert(key, v);
  return t;
}

inline CorrelationTensor stabilizer_full_tensor(const MixedEnsemble& ens, const FullTensorOptions& opts) {
  std::map<std::uint64_t, double> acc;
  for (const auto& term : ens.terms())
    for (const auto& e : full_weight_support(*term.stabilizer).entries)
      acc[e.index.key()] += term.weight * e.sign;
  CorrelationTensor t(ens.n(), opts.zero_tol);
  for (auto [key, v] : acc) t.insert(key, v);
  return t;
}

}  // namespace detail

/// All 3^n identity-free expectation values of the ensemble above zero_tol.
///
/// Ensembles whose members all carry a stabilizer group use exact GF(2)
/// enumeration (no qubit limit beyond the enumeration itself); anything else
/// falls back to the dense sweep, which refuses n > dense_limit.
inline CorrelationTensor full_tensor(const MixedEnsemble& ens, const FullTensorOptions& opts = {}) {
  detail::require(opts.zero_tol >= 0.0, "zero tolerance must be non-negative");
  if (opts.use_fast_path && ens.all_stabilizer()) return detail::stabilizer_full_tensor(ens, opts);
  if (ens.n() > opts.dense_limit)
    throw ResourceError("dense correlation sweep over 3^" + std::to_string(ens.n()) +
                        " strings exceeds the limit of " + std::to_string(opts.dense_limit) +
                        " qubits (raise " + kDenseLimitEnv + " to override)");
  return detail::dense_full_tensor(ens, opts);
}

inline double tensor_norm_sq(const CorrelationTensor& t) {
  double s = 0.0;
  for (const auto& [key, v] : t.entries()) s += v * v;
  return s;
}

/// Frobenius norm of the full correlation tensor.
inline double tensor_norm(const CorrelationTensor& t) { return std::sqrt(tensor_norm_sq(t)); }

inline std::size_t support_size(const CorrelationTensor& t) { return t.entries().size(); }

/// Local observables needed to evaluate the criterion on a complete-graph
/// state, optionally mixed with |1...1> noise (which adds Z^n).
inline std::vector<PauliString> measurement_settings(Family family, int n, bool include_noise = true) {
  if (family != Family::kCompleteGraph)
    throw ArgumentError("measurement settings are only defined for the cg family, not " + family_name(family));
  std::vector<PauliString> out;
  for (const auto& e : cg_nonzero_pattern(n).entries) out.push_back(embed(e.index));
  if (include_noise) out.push_back(PauliString(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::Z)));
  return out;
}

struct NormRow {
  Family family;
  int n;
  double norm_sq;
  double norm;
};

/// Family-major, n-ascending table of full-tensor norms.
inline std::vector<NormRow> norm_table(const std::vector<Family>& families, int n_min, int n_max,
                                       const FullTensorOptions& opts = {}) {
  if (n_min < 2 || n_min > n_max)
    throw ArgumentError("invalid qubit range " + std::to_string(n_min) + ".." + std::to_string(n_max));
  if (n_max > kMaxStateQubits) throw ResourceError("qubit range exceeds " + std::to_string(kMaxStateQubits));
  std::vector<NormRow> rows;
  for (Family f : families) {
    for (int n = n_min; n <= n_max; ++n) {
      if (f == Family::kW && n > opts.dense_limit)
        throw ResourceError("W-state norms need the dense sweep; n = " + std::to_string(n) +
                            " exceeds the limit of " + std::to_string(opts.dense_limit));
      const auto t = full_tensor(family_ensemble(f, n), opts);
      const double sq = tensor_norm_sq(t);
      rows.push_back({f, n, sq, std::sqrt(sq)});
    }
  }
  return rows;
}

}  // namespace cgsep
