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

#include <cstdlib>
#include <random>
#include <set>

#include "cgsep/correlation.hpp"
#include "cgsep/state_factory.hpp"
#include "test_util.hpp"

namespace cgsep {
namespace {

FullTensorOptions dense_only() {
  FullTensorOptions o;
  o.use_fast_path = false;
  return o;
}

MixedEnsemble rho_g(int n, double p) { return family_ensemble(Family::kCompleteGraph, n, p); }

TEST(FullTensor, CompleteGraphThreeQubits) {
  const auto t = full_tensor(rho_g(3, 0.0), dense_only());
  ASSERT_EQ(support_size(t), 4u);
  for (const auto& [key, v] : t.entries()) EXPECT_NEAR(std::abs(v), 1.0, 1e-12);
  EXPECT_NEAR(t.value(FullIndex({1, 1, 1})), -1.0, 1e-12);
  EXPECT_NEAR(t.value(FullIndex({1, 3, 3})), 1.0, 1e-12);
  EXPECT_EQ(t.value(FullIndex({3, 3, 3})), 0.0);
}

TEST(FullTensor, SingleQubitZeroState) {
  const auto t = full_tensor(MixedEnsemble::pure(PureState::basis(1, 0)), dense_only());
  ASSERT_EQ(support_size(t), 1u);
  EXPECT_DOUBLE_EQ(t.value(FullIndex({3})), 1.0);
}

TEST(FullTensor, NoisyFourQubitCompleteGraph) {
  const auto t = full_tensor(rho_g(4, 0.5), dense_only());
  ASSERT_EQ(support_size(t), 10u);
  for (const auto& [key, v] : t.entries()) EXPECT_NEAR(std::abs(v), 0.5, 1e-12);
  EXPECT_NEAR(t.value(FullIndex({3, 3, 3, 3})), 0.5, 1e-12);
  // Every other entry is in the complete-graph pattern.
  std::set<std::uint64_t> pattern;
  for (auto k : cg_nonzero_pattern(4).keys()) pattern.insert(k);
  for (const auto& [key, v] : t.entries())
    if (key != FullIndex({3, 3, 3, 3}).key()) {
      EXPECT_TRUE(pattern.count(key));
    }
}

TEST(FullTensor, FastPathMatchesDensePath) {
  for (int n = 2; n <= 7; ++n) {
    for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
      for (Family f : {Family::kCompleteGraph, Family::kGhz, Family::kCluster}) {
        const auto ens = family_ensemble(f, n, p);
        ASSERT_TRUE(ens.all_stabilizer());
        const auto fast = full_tensor(ens);
        const auto dense = full_tensor(ens, dense_only());
        ASSERT_EQ(fast.entries().size(), dense.entries().size()) << family_name(f) << n << " p=" << p;
        for (const auto& [key, v] : dense.entries()) EXPECT_NEAR(fast.entries().at(key), v, 1e-12);
      }
    }
  }
}

TEST(FullTensor, DenseLimitIsEnforcedAndConfigurable) {
  FullTensorOptions opts;
  opts.dense_limit = 4;
  EXPECT_THROW(full_tensor(family_ensemble(Family::kW, 5), opts), ResourceError);
  EXPECT_NO_THROW(full_tensor(family_ensemble(Family::kCompleteGraph, 12), opts));  // stabilizer path
  opts.dense_limit = 5;
  EXPECT_NO_THROW(full_tensor(family_ensemble(Family::kW, 5), opts));
  EXPECT_THROW(full_tensor(family_ensemble(Family::kW, 11)), ResourceError);
}

TEST(FullTensor, DenseLimitFromEnvironment) {
  ::setenv(kDenseLimitEnv, "6", 1);
  EXPECT_EQ(default_dense_limit(), 6);
  ::setenv(kDenseLimitEnv, "garbage", 1);
  EXPECT_EQ(default_dense_limit(), kDefaultDenseLimit);
  ::unsetenv(kDenseLimitEnv);
  EXPECT_EQ(default_dense_limit(), kDefaultDenseLimit);
}

TEST(FullTensor, ThreadCountDoesNotChangeResult) {
  auto one = dense_only(), four = dense_only();
  one.threads = 1;
  four.threads = 4;
  const auto ens = family_ensemble(Family::kW, 6, 0.3);
  EXPECT_EQ(full_tensor(ens, one).entries(), full_tensor(ens, four).entries());
}

TEST(FullTensor, ZeroToleranceDropsSmallEntries) {
  const auto ens = rho_g(3, 0.01);
  FullTensorOptions loose = dense_only();
  loose.zero_tol = 0.05;
  const auto t = full_tensor(ens, loose);
  EXPECT_EQ(support_size(t), 4u);  // the 0.01 Z^3 entry is dropped
  EXPECT_EQ(support_size(full_tensor(ens, dense_only())), 5u);
  loose.zero_tol = -1;
  EXPECT_THROW(full_tensor(ens, loose), ArgumentError);
}

TEST(CorrelationTensor, RejectsEntriesAboveOne) {
  CorrelationTensor t(2, 1e-9);
  EXPECT_THROW(t.insert(0, 1.1), ConsistencyError);
  t.insert(1, 1e-12);
  EXPECT_TRUE(t.entries().empty());
}

TEST(TensorNorm, Examples) {
  EXPECT_NEAR(tensor_norm(full_tensor(rho_g(7, 0.0), dense_only())), 8.0, 1e-9);
  const auto plus3 = graph_state(GraphSpec::edgeless(3));
  const auto t = full_tensor(MixedEnsemble::pure(plus3), dense_only());
  EXPECT_EQ(support_size(t), 1u);
  EXPECT_NEAR(tensor_norm(t), 1.0, 1e-12);
  EXPECT_NEAR(tensor_norm(full_tensor(family_ensemble(Family::kW, 8))), std::sqrt(4.5), 1e-9);
}

TEST(SupportSize, NoisyAndPureCompleteGraphs) {
  EXPECT_EQ(support_size(full_tensor(rho_g(6, 0.25), dense_only())), 34u);
  EXPECT_EQ(support_size(full_tensor(rho_g(5, 0.25), dense_only())), 17u);
  EXPECT_EQ(support_size(full_tensor(rho_g(4, 0.0), dense_only())), 9u);
}

TEST(MeasurementSettings, Examples) {
  std::set<std::string> n3;
  for (const auto& s : measurement_settings(Family::kCompleteGraph, 3)) n3.insert(s.str());
  EXPECT_EQ(n3, (std::set<std::string>{"XZZ", "ZXZ", "ZZX", "XXX", "ZZZ"}));
  EXPECT_EQ(measurement_settings(Family::kCompleteGraph, 4).size(), 10u);
  EXPECT_EQ(measurement_settings(Family::kCompleteGraph, 6).size(), 34u);
  EXPECT_EQ(measurement_settings(Family::kCompleteGraph, 4, false).size(), 9u);
  EXPECT_THROW(measurement_settings(Family::kW, 4), ArgumentError);
}

TEST(MeasurementSettings, CoverTheNoisySupport) {
  for (int n = 3; n <= 8; ++n) {
    const auto t = full_tensor(rho_g(n, 0.4), dense_only());
    std::set<std::uint64_t> settings;
    for (const auto& s : measurement_settings(Family::kCompleteGraph, n)) settings.insert(to_full_index(s).key());
    std::set<std::uint64_t> support;
    for (const auto& [key, v] : t.entries()) support.insert(key);
    EXPECT_EQ(settings, support) << n;
  }
}

TEST(NormTable, FullTableOneAndExtras) {
  const double expected[4][7] = {
      {3, 4, 9, 16, 33, 64, 129},
      {3, 4, 9, 16, 33, 64, 129},
      {3, 11.0 / 3, 4, 21.0 / 5, 13.0 / 3, 31.0 / 7, 9.0 / 2},
      {3, 4, 5, 8, 12, 17, 25},
  };
  const auto rows = norm_table({Family::kCompleteGraph, Family::kGhz, Family::kW, Family::kCluster}, 2, 8);
  ASSERT_EQ(rows.size(), 28u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, static_cast<int>(i % 7) + 2);
    EXPECT_NEAR(rows[i].norm, std::sqrt(expected[i / 7][i % 7]), 1e-9) << family_name(rows[i].family);
  }
  EXPECT_NEAR(norm_table({Family::kCompleteGraph}, 9, 9).front().norm, 16.0, 1e-9);  // 2^8 + 0, n odd
  EXPECT_NEAR(norm_table({Family::kW}, 6, 6).front().norm, std::sqrt(13.0 / 3), 1e-9);
  EXPECT_THROW(norm_table({Family::kW}, 1, 3), ArgumentError);
  EXPECT_THROW(norm_table({Family::kW}, 5, 4), ArgumentError);
  EXPECT_THROW(norm_table({Family::kW}, 11, 11), ResourceError);
}

TEST(NormProperties, MultiplicativeOverProducts) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int na = size(rng), nb = std::min(size(rng), 8 - na);
    const auto a = testing::random_state(na, rng), b = testing::random_state(nb, rng);
    const double na_norm = tensor_norm(full_tensor(MixedEnsemble::pure(a)));
    const double nb_norm = tensor_norm(full_tensor(MixedEnsemble::pure(b)));
    const double prod = tensor_norm(full_tensor(MixedEnsemble::pure(tensor_product(a, b))));
    EXPECT_NEAR(prod, na_norm * nb_norm, 1e-9);
  }
}

TEST(NormProperties, ConvexOverMixtures) {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const auto a = testing::random_state(n, rng), b = testing::random_state(n, rng);
    const double w = unit(rng);
    const MixedEnsemble mix({{w, a, std::nullopt}, {1 - w, b, std::nullopt}});
    const double lhs = tensor_norm(full_tensor(mix));
    const double rhs = w * tensor_norm(full_tensor(MixedEnsemble::pure(a))) +
                       (1 - w) * tensor_norm(full_tensor(MixedEnsemble::pure(b)));
    EXPECT_LE(lhs, rhs + 1e-9);
  }
}

TEST(NormProperties, CompleteGraphClosedForm) {
  for (int n = 2; n <= 10; ++n)
    EXPECT_NEAR(tensor_norm(full_tensor(rho_g(n, 0.0), dense_only())), cg_norm_closed(n), 1e-9) << n;
  for (int n = 2; n <= 20; ++n) {
    const auto t = full_tensor(rho_g(n, 0.0));
    EXPECT_EQ(support_size(t), cg_support_count(n));
    EXPECT_NEAR(tensor_norm(t), cg_norm_closed(n), 1e-9) << n;
  }
}

TEST(NormProperties, WStateSquaredNormIsFiveMinusFourOverN) {
  for (int n = 2; n <= 10; ++n)
    EXPECT_NEAR(tensor_norm_sq(full_tensor(family_ensemble(Family::kW, n))), 5.0 - 4.0 / n, 1e-9) << n;
}

TEST(NormProperties, NoisyCompleteGraphIdentity) {
  for (int n = 2; n <= 8; ++n) {
    const double s = static_cast<double>(cg_support_count(n));
    for (int i = 0; i <= 10; ++i) {
      const double p = i / 10.0;
      EXPECT_NEAR(tensor_norm_sq(full_tensor(rho_g(n, p), dense_only())), s * (1 - p) * (1 - p) + p * p, 1e-9)
          << n << " " << p;
    }
  }
}

// Observation only: cluster norms^2 follow a_n = a_{n-1} + a_{n-3} over the tabulated range.
TEST(NormProperties, ClusterSquaredNormsFollowRecurrenceOnTableRange) {
  std::vector<double> a;
  for (int n = 2; n <= 8; ++n) a.push_back(tensor_norm_sq(full_tensor(family_ensemble(Family::kCluster, n))));
  for (std::size_t i = 3; i < a.size(); ++i) EXPECT_NEAR(a[i], a[i - 1] + a[i - 3], 1e-9);
}

}  // namespace
}  // namespace cgsep
