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
#include <optional>
#include <string>
#include <vector>

#include "cgsep/errors.hpp"
#include "cgsep/graph.hpp"
#include "cgsep/stabilizer.hpp"
#include "cgsep/state.hpp"

namespace cgsep {

/// Weight p of the |1...1> admixture.
struct NoiseSpec {
  double p = 0.0;

  explicit NoiseSpec(double prob) : p(prob) {
    detail::require(prob >= 0.0 && prob <= 1.0, "noise probability must lie in [0, 1]");
  }
};

/// prod_{ab in E} CZ_ab |+>^n. Each CZ flips the sign of amplitudes whose bits
/// a and b are both 1.
inline PureState graph_state(const GraphSpec& spec) {
  const int n = spec.n();
  detail::require(n <= kMaxStateQubits, "graph state too large");
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * n);
  std::vector<Complex> a(dim, amp);
  for (auto [u, v] : spec.edges()) {
    const std::uint64_t both = detail::qubit_bit(n, u) | detail::qubit_bit(n, v);
    for (std::size_t i = 0; i < dim; ++i)
      if ((i & both) == both) a[i] = -a[i];
  }
  return PureState(n, std::move(a));
}

inline PureState ghz_state(int n) {
  detail::require(n >= 2 && n <= kMaxStateQubits, "GHZ state needs 2 <= n <= 24");
  std::vector<Complex> a(std::size_t{1} << n);
  a.front() = a.back() = 1.0 / std::sqrt(2.0);
  return PureState(n, std::move(a));
}

inline PureState w_state(int n) {
  detail::require(n >= 2 && n <= kMaxStateQubits, "W state needs 2 <= n <= 24");
  std::vector<Complex> a(std::size_t{1} << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int q = 0; q < n; ++q) a[std::size_t{1} << q] = amp;
  return PureState(n, std::move(a));
}

/// Linear-cluster state, built as the graph state of the path 1-2-...-n. This is
/// local-unitary equivalent to the product-form definition, so every tensor
/// norm agrees.
inline PureState cluster_state(int n) {
  detail::require(n >= 2 && n <= kMaxStateQubits, "cluster state needs 2 <= n <= 24");
  return graph_state(GraphSpec::chain(n));
}

inline PureState all_ones_state(int n) {
  return PureState::basis(n, (std::uint64_t{1} << n) - 1);
}

/// {(1-p, base), (p, |1...1>)}; zero-weight terms are dropped.
inline MixedEnsemble noisy_mixture(const PureState& base, NoiseSpec noise,
                                   std::optional<StabilizerGroup> base_stabilizer = std::nullopt) {
  std::vector<EnsembleTerm> terms;
  if (noise.p < 1.0) terms.push_back({1.0 - noise.p, base, std::move(base_stabilizer)});
  if (noise.p > 0.0)
    terms.push_back({noise.p, all_ones_state(base.n()), all_ones_stabilizer_group(base.n())});
  return MixedEnsemble(std::move(terms));
}

enum class Family { kCompleteGraph, kGhz, kW, kCluster };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::kCompleteGraph: return "cg";
    case Family::kGhz: return "ghz";
    case Family::kW: return "w";
    case Family::kCluster: return "cluster";
  }
  return "?";
}

inline Family parse_family(const std::string& name) {
  if (name == "cg") return Family::kCompleteGraph;
  if (name == "ghz") return Family::kGhz;
  if (name == "w") return Family::kW;
  if (name == "cluster") return Family::kCluster;
  throw ArgumentError("unknown state family '" + name + "' (expected cg, ghz, w or cluster)");
}

struct TaggedState {
  PureState state;
  std::optional<StabilizerGroup> stabilizer;
};

/// The family member on n qubits, tagged with its stabilizer group when it has one.
inline TaggedState family_state(Family family, int n) {
  switch (family) {
    case Family::kCompleteGraph: {
      auto g = GraphSpec::complete(n);
      return {graph_state(g), stabilizer_group(g)};
    }
    case Family::kGhz:
      return {ghz_state(n), ghz_stabilizer_group(n)};
    case Family::kW:
      return {w_state(n), std::nullopt};
    case Family::kCluster: {
      auto g = GraphSpec::chain(n);
      return {graph_state(g), stabilizer_group(g)};
    }
  }
  throw ArgumentError("unknown family");
}

inline MixedEnsemble family_ensemble(Family family, int n, double p = 0.0) {
  auto tagged = family_state(family, n);
  return noisy_mixture(tagged.state, NoiseSpec(p), std::move(tagged.stabilizer));
}

}  // namespace cgsep
