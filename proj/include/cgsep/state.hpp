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
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgsep/errors.hpp"
#include "cgsep/pauli.hpp"
#include "cgsep/symplectic.hpp"

namespace cgsep {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kImagTolerance = 1e-9;
inline constexpr int kMaxStateQubits = 24;

/// Normalized state vector. Basis index of |b_1 b_2 ... b_n> is sum_q b_q 2^(n-q),
/// i.e. qubit 1 is the most significant bit.
class PureState {
 public:
  PureState(int n, std::vector<Complex> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    detail::require(n_ >= 1 && n_ <= kMaxStateQubits, "state qubit count out of range");
    detail::require(amps_.size() == (std::size_t{1} << n_), "amplitude count must be 2^n");
    const double norm_sq = squared_norm(amps_);
    if (std::abs(norm_sq - 1.0) > kNormTolerance)
      throw ArgumentError("state is not normalized (|psi|^2 = " + std::to_string(norm_sq) + ")");
  }

  /// Computational basis state |index>.
  static PureState basis(int n, std::uint64_t index) {
    detail::require(n >= 1 && n <= kMaxStateQubits, "state qubit count out of range");
    detail::require(index < (std::uint64_t{1} << n), "basis index out of range");
    std::vector<Complex> a(std::size_t{1} << n);
    a[index] = 1.0;
    return PureState(n, std::move(a));
  }

  int n() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  static double squared_norm(std::span<const Complex> a) {
    double s = 0.0;
    for (const auto& c : a) s += std::norm(c);
    return s;
  }

 private:
  int n_;
  std::vector<Complex> amps_;
};

/// Kronecker product |a> (x) |b>; qubits of `a` come first.
inline PureState tensor_product(const PureState& a, const PureState& b) {
  detail::require(a.n() + b.n() <= kMaxStateQubits, "product state too large");
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return PureState(a.n() + b.n(), std::move(out));
}

/// One member of a convex mixture. `stabilizer` is set when the member is known
/// to be the stabilizer state of that group, which enables exact fast paths.
struct EnsembleTerm {
  double weight;
  PureState state;
  std::optional<StabilizerGroup> stabilizer;
};

class MixedEnsemble {
 public:
  explicit MixedEnsemble(std::vector<EnsembleTerm> terms) : terms_(std::move(terms)) {
    detail::require(!terms_.empty(), "ensemble needs at least one term");
    double total = 0.0;
    for (const auto& t : terms_) {
      detail::require(t.weight > 0.0, "ensemble weights must be positive");
      detail::require(t.state.n() == terms_.front().state.n(), "ensemble members differ in qubit count");
      if (t.stabilizer)
        detail::require(t.stabilizer->n() == t.state.n(), "stabilizer tag has wrong qubit count");
      total += t.weight;
    }
    if (std::abs(total - 1.0) > kNormTolerance)
      throw ArgumentError("ensemble weights must sum to 1");
  }

  static MixedEnsemble pure(PureState state, std::optional<StabilizerGroup> stabilizer = std::nullopt) {
    std::vector<EnsembleTerm> t;
    t.push_back({1.0, std::move(state), std::move(stabilizer)});
    return MixedEnsemble(std::move(t));
  }

  int n() const { return terms_.front().state.n(); }
  const std::vector<EnsembleTerm>& terms() const { return terms_; }

  bool all_stabilizer() const {
    for (const auto& t : terms_)
      if (!t.stabilizer) return false;
    return true;
  }

 private:
  std::vector<EnsembleTerm> terms_;
};

namespace detail {

/// <psi| P |psi> for P given by its flip/phase masks, before the i^{#Y} factor.
inline Complex pauli_overlap(std::span<const Complex> amps, std::uint64_t x_mask, std::uint64_t z_mask) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const Complex term = std::conj(amps[i ^ x_mask]) * amps[i];
    if (std::popcount(i & z_mask) & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

inline Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace detail

/// <psi|P|psi>, computed with one pass over the amplitudes (no matrix is built).
inline double expectation(const PureState& state, const PauliString& p) {
  if (state.n() != p.n())
    throw ArgumentError("Pauli string has " + std::to_string(p.n()) + " qubits, state has " +
                        std::to_string(state.n()));
  const Complex v = detail::i_power(p.y_count()) *
                    detail::pauli_overlap(state.amplitudes(), p.x_mask(), p.z_mask());
  if (std::abs(v.imag()) > kImagTolerance)
    throw ConsistencyError("expectation of Hermitian " + p.str() + " has imaginary part " +
                           std::to_string(v.imag()));
  return v.real();
}

inline double ensemble_expectation(const MixedEnsemble& ens, const PauliString& p) {
  if (ens.n() != p.n())
    throw ArgumentError("Pauli string has " + std::to_string(p.n()) + " qubits, ensemble has " +
                        std::to_string(ens.n()));
  double acc = 0.0;
  for (const auto& t : ens.terms()) acc += t.weight * expectation(t.state, p);
  return acc;
}

}  // namespace cgsep
