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


#include <gtest/gtest.h>

#include <cmath>
#include <iostream>

#include "cgsep/correlation.hpp"
#include "cgsep/separability.hpp"
#include "cgsep/state_factory.hpp"
#include "test_util.hpp"

namespace cgsep {
namespace {

double oracle_norm_sq(Family f, int n, double p) {
  FullTensorOptions opts;
  opts.use_fast_path = false;
  return tensor_norm_sq(full_tensor(family_ensemble(f, n, p), opts));
}

TEST(AdmissiblePartitions, Examples) {
  EXPECT_EQ(admissible_partitions(5, 3), (std::vector<Partition>{{1, 1, 3}}));
  EXPECT_EQ(admissible_partitions(4, 2), (std::vector<Partition>{{1, 3}}));
  EXPECT_EQ(admissible_partitions(6, 6), (std::vector<Partition>{{1, 1, 1, 1, 1, 1}}));
  EXPECT_EQ(admissible_partitions(6, 3), (std::vector<Partition>{{1, 1, 4}, {1, 2, 3}}));
  EXPECT_EQ(admissible_partitions(6, 3, PartitionRule::kUnrestricted),
            (std::vector<Partition>{{1, 1, 4}, {1, 2, 3}, {2, 2, 2}}));
  EXPECT_THROW(admissible_partitions(4, 5), ArgumentError);
  EXPECT_THROW(admissible_partitions(4, 0), ArgumentError);
}

TEST(AdmissiblePartitions, MatchBruteForceCompositions) {
  for (auto rule : {PartitionRule::kAtMostOneTwo, PartitionRule::kCanonical, PartitionRule::kUnrestricted}) {
    for (int n = 1; n <= 15; ++n) {
      for (int k = 1; k <= n; ++k) {
        std::vector<Partition> expected;
        for (const auto& m : testing::brute_force_multisets(n, k))
          if (admits(m, rule)) expected.push_back(m);  // std::set iterates in lexicographic order
        EXPECT_EQ(admissible_partitions(n, k, rule), expected) << rule_name(rule) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(PartNorm, Examples) {
  EXPECT_DOUBLE_EQ(part_norm(1), 1.0);
  EXPECT_DOUBLE_EQ(part_norm(2), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(part_norm(4), 3.0);
  EXPECT_THROW(part_norm(0), ArgumentError);
}

TEST(KSepBound, Examples) {
  const auto b63 = k_sep_bound(6, 3);
  EXPECT_NEAR(b63.bound, 3.4641, 1e-4);
  EXPECT_EQ(b63.parts, (Partition{1, 2, 3}));
  EXPECT_EQ(b63.per_part_s, (std::vector<int>{0, 1, 0}));
  const auto b82 = k_sep_bound(8, 2);
  EXPECT_NEAR(b82.bound, std::sqrt(99.0), 1e-12);
  EXPECT_EQ(b82.parts, (Partition{2, 6}));
  const auto b94 = k_sep_bound(9, 4);
  EXPECT_NEAR(b94.bound, 6.9282, 1e-4);
  EXPECT_EQ(b94.parts, (Partition{1, 1, 2, 5}));
  EXPECT_THROW(k_sep_bound(5, 1), ArgumentError);
  EXPECT_THROW(k_sep_bound(5, 6), ArgumentError);
}

TEST(KSepBound, RuleVariants) {
  // The literal one-two rule admits 2|3|4 at N = 9, k = 3.
  const auto literal = k_sep_bound(9, 3, PartitionRule::kAtMostOneTwo);
  EXPECT_EQ(literal.parts, (Partition{2, 3, 4}));
  EXPECT_NEAR(literal.bound_sq, 108.0, 1e-12);
  EXPECT_NEAR(k_sep_bound(9, 3).bound_sq, 99.0, 1e-12);
  const auto unrestricted = k_sep_bound(6, 3, PartitionRule::kUnrestricted);
  EXPECT_EQ(unrestricted.parts, (Partition{2, 2, 2}));
  EXPECT_NEAR(unrestricted.bound_sq, 27.0, 1e-12);
}

TEST(KSepBound, IsTheMaximumOverBruteForcePartitions) {
  for (auto rule : {PartitionRule::kAtMostOneTwo, PartitionRule::kCanonical, PartitionRule::kUnrestricted}) {
    for (int n = 2; n <= 14; ++n) {
      for (int k = 2; k <= n; ++k) {
        double best = 0;
        for (const auto& m : testing::brute_force_multisets(n, k)) {
          if (!admits(m, rule)) continue;
          double prod = 1;
          for (int part : m) prod *= std::pow(2.0, part - 1) + (part % 2 == 0 ? 1 : 0);
          best = std::max(best, prod);
        }
        EXPECT_DOUBLE_EQ(k_sep_bound(n, k, rule).bound_sq, best) << n << "," << k;
      }
    }
  }
}

TEST(BiseparableBound, ExamplesAndAgreement) {
  EXPECT_NEAR(biseparable_bound(3), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(biseparable_bound(5), std::sqrt(12.0), 1e-12);
  EXPECT_NEAR(biseparable_bound(7), std::sqrt(48.0), 1e-12);
  for (int n = 3; n <= 30; ++n) EXPECT_DOUBLE_EQ(biseparable_bound(n), k_sep_bound(n, 2).bound) << n;
  EXPECT_THROW(biseparable_bound(2), ArgumentError);
}

TEST(Detect, Examples) {
  const auto v = detect(std::sqrt(33.0), 6, 2);
  EXPECT_EQ(v.outcome, Outcome::kNonKSeparable);
  EXPECT_NEAR(v.bound, std::sqrt(27.0), 1e-12);
  EXPECT_EQ(detect(std::sqrt(27.0), 6, 2).outcome, Outcome::kInconclusive);

  const double norm = std::sqrt(oracle_norm_sq(Family::kCompleteGraph, 6, 0.5));
  EXPECT_NEAR(norm * norm, 8.5, 1e-9);
  EXPECT_EQ(detect(norm, 6, 6).outcome, Outcome::kNonKSeparable);
  EXPECT_THROW(detect(-1.0, 6, 2), ArgumentError);
}

TEST(Detect, ProductStatesAreNeverFlagged) {
  std::mt19937_64 rng(31);
  for (int n = 3; n <= 7; ++n) {
    PureState s = testing::random_state(1, rng);
    for (int q = 1; q < n; ++q) s = tensor_product(s, testing::random_state(1, rng));
    const double norm = tensor_norm(full_tensor(MixedEnsemble::pure(s)));
    for (int k = 2; k <= n; ++k) EXPECT_EQ(detect(norm, n, k).outcome, Outcome::kInconclusive);
  }
}

TEST(BoundProperties, MonotoneInK) {
  for (auto rule : {PartitionRule::kCanonical, PartitionRule::kAtMostOneTwo}) {
    for (int n = 3; n <= 12; ++n)
      for (int k = 2; k < n; ++k)
        EXPECT_GE(k_sep_bound(n, k, rule).bound, k_sep_bound(n, k + 1, rule).bound)
            << rule_name(rule) << " n=" << n << " k=" << k;
  }
}

TEST(BoundProperties, VerdictCascade) {
  for (int n = 3; n <= 10; ++n) {
    for (double norm = 0.0; norm <= 25.0; norm += 0.37) {
      for (int k = 2; k <= n; ++k) {
        if (detect(norm, n, k).outcome != Outcome::kNonKSeparable) continue;
        for (int k2 = k; k2 <= n; ++k2) EXPECT_EQ(detect(norm, n, k2).outcome, Outcome::kNonKSeparable);
      }
    }
  }
}

TEST(XiNoise, Examples) {
  const auto a = xi_noise(6, 2, 0.0);
  EXPECT_NEAR(a.xi, 33.0 / 27.0, 1e-12);
  EXPECT_DOUBLE_EQ(a.numerator, 33.0);
  EXPECT_DOUBLE_EQ(a.denominator, 27.0);
  EXPECT_NEAR(xi_noise(6, 6, 0.5).xi, 8.5, 1e-12);
  for (int n = 2; n <= 10; ++n)
    for (int k = 2; k <= n; ++k) EXPECT_NEAR(xi_noise(n, k, 1.0).numerator, 1.0, 1e-12);
  EXPECT_THROW(xi_noise(6, 2, -0.1), ArgumentError);
  EXPECT_THROW(xi_noise(6, 2, 1.1), ArgumentError);
}

TEST(XiNoise, SixQubitNumeratorMatchesOracle) {
  for (int i = 0; i <= 20; ++i) {
    const double p = i / 20.0;
    EXPECT_NEAR(oracle_norm_sq(Family::kCompleteGraph, 6, p), 33 - 66 * p + 34 * p * p, 1e-9);
  }
}

TEST(XiNoise, ExceedsOneExactlyWhenOracleNormBeatsBound) {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      const double norm = std::sqrt(oracle_norm_sq(Family::kCompleteGraph, n, p));
      for (int k = 2; k <= n; ++k) {
        const auto xi = xi_noise(n, k, p);
        const bool detected = detect(norm, n, k).outcome == Outcome::kNonKSeparable;
        if (std::abs(norm - std::sqrt(xi.denominator)) <= kDetectMargin) {
          // Grid point sits on a threshold root: neither side certifies anything.
          EXPECT_NEAR(xi.xi, 1.0, 1e-9);
          EXPECT_FALSE(detected);
          continue;
        }
        EXPECT_EQ(xi.xi > 1.0, detected) << "n=" << n << " k=" << k << " p=" << p;
      }
    }
  }
}

TEST(XiNoise, GhzNumeratorComesFromOracle) {
  for (int n = 2; n <= 8; ++n) {
    const auto q = noise_quadratic(Family::kGhz, n);
    const double s = static_cast<double>(cg_support_count(n));
    for (int i = 0; i <= 10; ++i) {
      const double p = i / 10.0;
      const double oracle = oracle_norm_sq(Family::kGhz, n, p);
      EXPECT_NEAR(q.at(p), oracle, 1e-9);
      const double complete_graph = s * (1 - 2 * p) + (s + 1) * p * p;
      if (n % 2 == 0) {
        EXPECT_NEAR(oracle, std::pow(2.0, n - 1) * (1 - p) * (1 - p) + 1, 1e-9);
        EXPECT_NEAR(oracle - complete_graph, 2 * p * (1 - p), 1e-9);
      } else {
        EXPECT_NEAR(oracle, complete_graph, 1e-9);
      }
    }
  }
}

TEST(ThresholdP, SixQubitBiseparableAgreesWithBisection) {
  const auto pstar = threshold_p(6, 2);
  ASSERT_TRUE(pstar.has_value());
  EXPECT_NEAR(*pstar, (66 - std::sqrt(66.0 * 66 - 4 * 34 * 6)) / 68, 1e-12);
  const double bisected = testing::bisect(
      [](double p) { return oracle_norm_sq(Family::kCompleteGraph, 6, p) / 27.0 - 1.0; }, 0.0, 0.5);
  EXPECT_NEAR(*pstar, bisected, 1e-9);
  EXPECT_GT(*pstar, 0.0955);
  EXPECT_LT(*pstar, 0.0957);
}

TEST(ThresholdP, FullSeparabilityThreeQubits) {
  // 4(1-p)^2 + p^2 = 1  <=>  5p^2 - 8p + 3 = 0, roots 0.6 and 1.
  const auto pstar = threshold_p(3, 3);
  ASSERT_TRUE(pstar.has_value());
  EXPECT_NEAR(*pstar, 0.6, 1e-12);
  for (double p : {0.55, 0.59}) EXPECT_GT(oracle_norm_sq(Family::kCompleteGraph, 3, p), 1.0);
  for (double p : {0.61, 0.8}) EXPECT_LT(oracle_norm_sq(Family::kCompleteGraph, 3, p), 1.0);
}

TEST(ThresholdP, LargeEvenNApproachesLimit) {
  const double limit = 1 - std::sqrt(3.0) / 2;
  EXPECT_NEAR(*threshold_p(40, 2), limit, 1e-6);
  for (int n : {10, 12, 14}) {
    const double p = *threshold_p(n, 2);
    EXPECT_GT(p, 0.12);
    EXPECT_LT(p, 0.14);
  }
}

TEST(ThresholdP, NoCrossingReturnsNothing) {
  // The W state's norm never reaches the 6-qubit biseparable bound.
  EXPECT_FALSE(threshold_p(6, 2, Family::kW).has_value());
}

}  // namespace
}  // namespace cgsep
