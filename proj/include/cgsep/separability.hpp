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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgsep/correlation.hpp"
#include "cgsep/errors.hpp"
#include "cgsep/stabilizer.hpp"
#include "cgsep/state_factory.hpp"

namespace cgsep {

/// Part sizes of a k-partition, non-decreasing.
using Partition = std::vector<int>;

/// Which multisets of part sizes enter the k-separability maximum.
enum class PartitionRule {
  /// At most one part of size 2.
  kAtMostOneTwo,
  /// Ones, at most one part of size 2 and at most one part larger than 2.
  /// This is the shape that attains the tabulated bounds for N <= 9.
  kCanonical,
  /// Every multiset (for comparison only).
  kUnrestricted,
};

inline std::string rule_name(PartitionRule r) {
  switch (r) {
    case PartitionRule::kAtMostOneTwo: return "at-most-one-two";
    case PartitionRule::kCanonical: return "canonical";
    case PartitionRule::kUnrestricted: return "unrestricted";
  }
  return "?";
}

inline PartitionRule parse_rule(const std::string& name) {
  if (name == "at-most-one-two") return PartitionRule::kAtMostOneTwo;
  if (name == "canonical") return PartitionRule::kCanonical;
  if (name == "unrestricted") return PartitionRule::kUnrestricted;
  throw ArgumentError("unknown partition rule '" + name + "'");
}

inline bool admits(const Partition& parts, PartitionRule rule) {
  const auto twos = std::count(parts.begin(), parts.end(), 2);
  const auto large = std::count_if(parts.begin(), parts.end(), [](int m) { return m > 2; });
  switch (rule) {
    case PartitionRule::kAtMostOneTwo: return twos <= 1;
    case PartitionRule::kCanonical: return twos <= 1 && large <= 1;
    case PartitionRule::kUnrestricted: return true;
  }
  return false;
}

/// Multisets of k positive integers summing to n that pass `rule`, in
/// lexicographic order.
inline std::vector<Partition> admissible_partitions(int n, int k,
                                                    PartitionRule rule = PartitionRule::kAtMostOneTwo) {
  detail::require(n >= 1, "n must be positive");
  if (k < 1 || k > n)
    throw ArgumentError("k = " + std::to_string(k) + " is outside 1.." + std::to_string(n));

  std::vector<Partition> out;
  Partition current;
  current.reserve(static_cast<std::size_t>(k));
  std::function<void(int, int, int)> extend = [&](int remaining, int slots, int min_part) {
    if (slots == 0) {
      if (remaining == 0 && admits(current, rule)) out.push_back(current);
      return;
    }
    // The remaining slots all need parts >= min_part.
    for (int m = min_part; m * slots <= remaining; ++m) {
      if (slots == 1 && m != remaining) continue;
      current.push_back(m);
      extend(remaining - m, slots - 1, m);
      current.pop_back();
    }
  };
  extend(n, k, 1);
  return out;
}

/// 2^(m-1) + s_m, the squared norm of an m-qubit complete-graph block.
inline std::uint64_t part_norm_sq(int m) {
  detail::require(m >= 1, "part size must be positive");
  return cg_support_count(m);
}

inline double part_norm(int m) { return std::sqrt(static_cast<double>(part_norm_sq(m))); }

inline std::string format_partition(const Partition& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '|';
    s += std::to_string(parts[i]);
  }
  return s;
}

struct PartitionBound {
  int n = 0;
  int k = 0;
  Partition parts;
  double bound_sq = 0.0;
  double bound = 0.0;
  std::vector<int> per_part_s;
};

inline PartitionBound make_partition_bound(int n, const Partition& parts) {
  PartitionBound b;
  b.n = n;
  b.k = static_cast<int>(parts.size());
  b.parts = parts;
  b.bound_sq = 1.0;
  for (int m : parts) {
    b.bound_sq *= static_cast<double>(part_norm_sq(m));
    b.per_part_s.push_back(m % 2 == 0 ? 1 : 0);
  }
  b.bound = std::sqrt(b.bound_sq);
  return b;
}

/// Largest product of block norms over the admissible k-partitions of n.
/// Ties go to the lexicographically smallest partition.
inline PartitionBound k_sep_bound(int n, int k, PartitionRule rule = PartitionRule::kCanonical) {
  if (k < 2 || k > n)
    throw ArgumentError("k = " + std::to_string(k) + " is outside 2.." + std::to_string(n));
  const auto candidates = admissible_partitions(n, k, rule);
  if (candidates.empty())
    throw ArgumentError("no admissible " + std::to_string(k) + "-partition of " + std::to_string(n));
  PartitionBound best = make_partition_bound(n, candidates.front());
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    auto b = make_partition_bound(n, candidates[i]);
    if (b.bound_sq > best.bound_sq) best = std::move(b);
  }
  return best;
}

/// Closed-form biseparable bound: split b | n-b with b = 1 when ceil(n/2) <= 2,
/// otherwise b = 2.
inline double biseparable_bound(int n) {
  detail::require(n >= 3, "biseparable bound needs n >= 3");
  const int b = (n + 1) / 2 <= 2 ? 1 : 2;
  return std::sqrt(static_cast<double>(part_norm_sq(b)) * static_cast<double>(part_norm_sq(n - b)));
}

/// Absolute slack on the strict norm > bound test. Norms accumulate rounding
/// error, so values within this distance of the bound are not certified.
inline constexpr double kDetectMargin = 1e-9;

enum class Outcome { kNonKSeparable, kInconclusive };

inline std::string outcome_name(Outcome o) {
  return o == Outcome::kNonKSeparable ? "NonKSeparable" : "Inconclusive";
}

struct Verdict {
  Outcome outcome;
  double norm;
  double bound;
  int k;
  Partition partition;
};

/// Non-k-separable iff norm > bound strictly (beyond kDetectMargin). The
/// criterion is only sufficient, so anything else is Inconclusive, never
/// "separable".
inline Verdict detect(double norm, int n, int k, PartitionRule rule = PartitionRule::kCanonical) {
  detail::require(norm >= 0.0, "norm must be non-negative");
  const auto pb = k_sep_bound(n, k, rule);
  return {norm > pb.bound + kDetectMargin ? Outcome::kNonKSeparable : Outcome::kInconclusive, norm, pb.bound, k, pb.parts};
}

/// Squared tensor norm of (1-p) psi + p |1..1><1..1| as a function of p:
/// pure_sq (1-p)^2 + 2 cross p (1-p) + noise_sq p^2. Exact because the tensor
/// is affine in p.
struct NoiseQuadratic {
  double pure_sq = 0.0;
  double cross = 0.0;
  double noise_sq = 1.0;

  double at(double p) const {
    return pure_sq * (1 - p) * (1 - p) + 2 * cross * p * (1 - p) + noise_sq * p * p;
  }
  // c2 p^2 + c1 p + c0
  double c0() const { return pure_sq; }
  double c1() const { return 2 * cross - 2 * pure_sq; }
  double c2() const { return pure_sq - 2 * cross + noise_sq; }
};

/// Coefficients from the family's own correlation tensor and that of |1...1>.
inline NoiseQuadratic noise_quadratic_oracle(Family family, int n, const FullTensorOptions& opts = {}) {
  const auto pure = full_tensor(family_ensemble(family, n), opts);
  const auto noise = full_tensor(family_ensemble(family, n, 1.0), opts);
  NoiseQuadratic q;
  q.pure_sq = tensor_norm_sq(pure);
  q.noise_sq = tensor_norm_sq(noise);
  q.cross = 0.0;
  for (const auto& [key, v] : noise.entries()) {
    auto it = pure.entries().find(key);
    if (it != pure.entries().end()) q.cross += v * it->second;
  }
  return q;
}

/// Complete-graph family in closed form: (2^(n-1)+s)(1-2p) + (2^(n-1)+s+1) p^2.
/// Other families go through noise_quadratic_oracle.
inline NoiseQuadratic noise_quadratic(Family family, int n, const FullTensorOptions& opts = {}) {
  if (family == Family::kCompleteGraph)
    return {static_cast<double>(cg_support_count(n)), 0.0, 1.0};
  return noise_quadratic_oracle(family, n, opts);
}

struct XiResult {
  int n = 0;
  int k = 0;
  double p = 0.0;
  double numerator = 0.0;    // squared tensor norm
  double denominator = 0.0;  // squared k-separability bound
  double xi = 0.0;
};

inline XiResult xi_noise(int n, int k, double p, Family family = Family::kCompleteGraph,
                         PartitionRule rule = PartitionRule::kCanonical) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("noise probability must lie in [0, 1]");
  const auto pb = k_sep_bound(n, k, rule);
  XiResult r;
  r.n = n;
  r.k = k;
  r.p = p;
  r.numerator = noise_quadratic(family, n).at(p);
  r.denominator = pb.bound_sq;
  r.xi = r.numerator / r.denominator;
  return r;
}

/// Smallest p in [0, 1] where the noisy squared norm meets the squared bound,
/// or nothing if the curves do not cross there.
inline std::optional<double> threshold_p(int n, int k, Family family = Family::kCompleteGraph,
                                         PartitionRule rule = PartitionRule::kCanonical) {
  const auto q = noise_quadratic(family, n);
  const double a = q.c2(), b = q.c1(), c = q.c0() - k_sep_bound(n, k, rule).bound_sq;
  std::vector<double> roots;
  if (std::abs(a) < 1e-15) {
    if (std::abs(b) > 1e-15) roots.push_back(-c / b);
  } else {
    const double disc = b * b - 4 * a * c;
    if (disc >= 0.0) {
      // Cancellation-free pair of roots.
      const double s = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      if (s != 0.0) roots.push_back(c / s);
      roots.push_back(s / a);
    }
  }
  std::optional<double> best;
  constexpr double eps = 1e-12;
  for (double r : roots) {
    if (r < -eps || r > 1.0 + eps) continue;
    r = std::clamp(r, 0.0, 1.0);
    if (!best || r < *best) best = r;
  }
  return best;
}

}  // namespace cgsep
