// Copyright 2026 The duality-lab Authors
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

#include "duality_lab/ensemble.hpp"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "duality_lab/error.hpp"
#include "oracles.hpp"

namespace duality_lab {
namespace {

TEST(RngTest, UniformRangeAndDeterminism) {
  Rng a(42), b(42);
  for (int i = 0; i < 10000; ++i) {
    const double u = a.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_EQ(u, b.uniform());
  }
  Rng c(3);
  for (int i = 0; i < 10000; ++i) EXPECT_LT(c.below(7), 7u);
  EXPECT_THROW(c.below(0), ValidationError);
}

TEST(RngTest, StreamsDiffer) {
  Rng s0 = Rng::for_stream(1, 0);
  Rng s1 = Rng::for_stream(1, 1);
  EXPECT_NE(s0.next(), s1.next());
  EXPECT_EQ(Rng::for_stream(9, 4).next(), Rng::for_stream(9, 4).next());
}

TEST(RngTest, ExponentialMean) {
  Rng rng(77);
  double sum = 0.0;
  const int count = 200000;
  for (int i = 0; i < count; ++i) sum += rng.exponential();
  EXPECT_NEAR(sum / count, 1.0, 0.01);
}

TEST(SampleSpecTest, SingleIndexIsUnitAmplitude) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto spec = sample_spec(5, 1, rng);
    ASSERT_EQ(spec.dimension(), 1);
    EXPECT_EQ(spec.amplitudes()[0], 1.0);
  }
}

TEST(SampleSpecTest, ValidSpecsAndUniformSupports) {
  Rng rng(2);
  std::vector<int> hits(6, 0);
  for (int trial = 0; trial < 30000; ++trial) {
    const auto spec = sample_spec(6, 2, rng);
    const auto p = spec.probabilities();
    EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
    for (double x : p) EXPECT_GT(x, 0.0);
    for (int k : spec.support().indices()) ++hits[k];
  }
  for (int h : hits) EXPECT_NEAR(h / 60000.0, 1.0 / 6, 0.01);
  EXPECT_THROW(sample_spec(6, 0, rng), ValidationError);
  EXPECT_THROW(sample_spec(6, 7, rng), ValidationError);
}

TEST(SampleSpecTest, FlatDirichletMean) {
  Rng rng(3);
  std::vector<double> sum(6, 0.0);
  const int count = 100000;
  for (int trial = 0; trial < count; ++trial) {
    const auto p = sample_spec(6, 6, rng).probabilities();
    for (int k = 0; k < 6; ++k) sum[k] += p[k];
  }
  for (double s : sum) EXPECT_NEAR(s / count, 1.0 / 6, 0.005);
}

TEST(SampleSpecTest, FlatDirichletSecondMoment) {
  // E[p^2] = 2 / (n (n + 1)) for the flat Dirichlet on n components.
  Rng rng(4);
  double sum = 0.0;
  const int count = 100000;
  for (int trial = 0; trial < count; ++trial) sum += std::pow(sample_spec(4, 4, rng).probabilities()[0], 2);
  EXPECT_NEAR(sum / count, 0.1, 0.002);
}

TEST(TwoPathGridTest, Layout) {
  const auto grid = two_path_grid(200);
  ASSERT_EQ(grid.size(), 201u);
  EXPECT_EQ(grid[0].dimension(), 1);
  EXPECT_NEAR(grid[200].probabilities()[0], 0.5, 1e-15);
  EXPECT_NEAR(grid[100].probabilities()[1], 0.25, 1e-15);
  EXPECT_THROW(two_path_grid(0), ValidationError);
}

SweepConfig base_config() {
  SweepConfig c;
  c.num_paths = 4;
  c.dimension = 3;
  c.samples = 500;
  c.seed = 11;
  c.strategies = {{Strategy::kMinimumError, 0.0}, {Strategy::kFrioStandard, 0.5},
                  {Strategy::kFrioConcatenated, 0.5}};
  return c;
}

TEST(SweepTest, DeterministicAndScheduleIndependent) {
  auto c = base_config();
  c.threads = 1;
  const auto a = run_sweep(c);
  c.threads = 3;
  const auto b = run_sweep(c);
  ASSERT_EQ(a.points.size(), 1500u);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].knowledge, b.points[i].knowledge);
    EXPECT_EQ(a.points[i].coherence, b.points[i].coherence);
    EXPECT_EQ(testing::as_vector(a.points[i].support.indices()), testing::as_vector(b.points[i].support.indices()));
  }
  c.seed = 12;
  EXPECT_NE(run_sweep(c).points[0].coherence, a.points[0].coherence);
}

TEST(SweepTest, PointLayout) {
  const auto d = run_sweep(base_config());
  for (std::size_t i = 0; i < d.points.size(); i += 3) {
    EXPECT_EQ(d.points[i].strategy, Strategy::kMinimumError);
    EXPECT_EQ(d.points[i + 1].strategy, Strategy::kFrioStandard);
    EXPECT_EQ(d.points[i + 2].strategy, Strategy::kFrioConcatenated);
    EXPECT_EQ(d.points[i].coherence, d.points[i + 1].coherence);
    EXPECT_EQ(d.points[i].dimension, 3);
    EXPECT_EQ(d.points[i].num_paths, 4);
    EXPECT_LE(d.points[i + 1].knowledge, d.points[i + 2].knowledge + 1e-9);
    for (int s = 0; s < 3; ++s) EXPECT_LE(d.points[i + s].duality_sum, 1 + 1e-9);
  }
}

TEST(SweepTest, RandomDimensionCoversAllValues) {
  auto c = base_config();
  c.dimension.reset();
  c.strategies = {{Strategy::kMinimumError, 0.0}};
  std::vector<int> seen(5, 0);
  for (const auto& p : run_sweep(c).points) ++seen[p.dimension];
  for (int n = 1; n <= 4; ++n) EXPECT_GT(seen[n], 80);
}

TEST(SweepTest, UniformOverlayCoversCorners) {
  SweepConfig c;
  c.num_paths = 4;
  c.samples = 10;
  c.include_uniform_enumeration = true;
  const auto d = run_sweep(c);
  ASSERT_EQ(d.points.size(), 10u + 15u);
  bool corner_k0 = false, corner_k1 = false;
  for (const auto& p : d.points) {
    if (std::abs(p.knowledge) < 1e-12 && std::abs(p.coherence - 1) < 1e-12) corner_k0 = true;
    if (std::abs(p.knowledge - 1) < 1e-12 && std::abs(p.coherence) < 1e-12) corner_k1 = true;
  }
  EXPECT_TRUE(corner_k0);
  EXPECT_TRUE(corner_k1);
}

TEST(SweepTest, GridMode) {
  SweepConfig c;
  c.num_paths = 2;
  c.grid_steps = 200;
  c.strategies = {{Strategy::kMinimumError, 0.0}};
  const auto d = run_sweep(c);
  ASSERT_EQ(d.points.size(), 201u);
  for (const auto& p : d.points) EXPECT_LE(p.duality_sum, 1.0 + 1e-9);
  EXPECT_NEAR(d.points.front().duality_sum, 1.0, 1e-12);
  EXPECT_NEAR(d.points.back().duality_sum, 1.0, 1e-12);
  c.num_paths = 3;
  EXPECT_THROW(run_sweep(c), ValidationError);
}

TEST(SweepTest, ConfigValidation) {
  auto c = base_config();
  c.samples = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = base_config();
  c.dimension = 5;
  EXPECT_THROW(c.validate(), ValidationError);
  c = base_config();
  c.strategies = {{Strategy::kFrioStandard, 1.5}};
  EXPECT_THROW(c.validate(), ValidationError);
  c = base_config();
  c.envelope_bins = 1;
  EXPECT_THROW(c.validate(), ValidationError);
  c = base_config();
  c.envelope_bins = 0;
  EXPECT_FALSE(run_sweep(c).envelope);
}

TEST(EnvelopeTest, HandBuiltPoints) {
  std::vector<DualityPoint> pts(4);
  pts[0].knowledge = 0.05; pts[0].coherence = 0.9;
  pts[1].knowledge = 0.07; pts[1].coherence = 0.4;
  pts[2].knowledge = 0.95; pts[2].coherence = 0.01;
  pts[3].knowledge = 1.0;  pts[3].coherence = 0.0;
  const auto env = boundary_envelope(pts, 10);
  ASSERT_EQ(env.size(), 2u);
  EXPECT_NEAR(env[0].k_center, 0.05, 1e-15);
  EXPECT_EQ(env[0].count, 2u);
  EXPECT_EQ(env[0].c_min, 0.4);
  EXPECT_EQ(env[0].c_max, 0.9);
  EXPECT_NEAR(env[1].k_center, 0.95, 1e-15);
  EXPECT_EQ(env[1].count, 2u);
  EXPECT_THROW(boundary_envelope({}, 10), ValidationError);
  EXPECT_THROW(boundary_envelope(pts, 1), ValidationError);
}

TEST(EnvelopeTest, ThreePathMeEnvelopeRespectsBound) {
  SweepConfig c;
  c.num_paths = 3;
  c.samples = 100000;
  c.seed = 5;
  c.envelope_bins = 100;
  const auto d = run_sweep(c);
  ASSERT_TRUE(d.envelope);
  const auto& env = *d.envelope;
  ASSERT_FALSE(env.empty());
  EXPECT_LT(env.front().k_center, 0.01);
  EXPECT_NEAR(env.front().c_max, 1.0, 1e-9);
  std::size_t total = 0;
  for (const auto& b : env) {
    total += b.count;
    EXPECT_LE(b.c_max, 1.0 - (b.k_center - 0.005) + 1e-9);
    EXPECT_LE(b.c_min, b.c_max);
  }
  EXPECT_EQ(total, c.samples);
}

TEST(EnvelopeTest, ConcatenatedReachesAtLeastFrio) {
  SweepConfig c;
  c.num_paths = 5;
  c.samples = 2000;
  c.seed = 6;
  c.strategies = {{Strategy::kFrioStandard, 0.5}, {Strategy::kFrioConcatenated, 0.5}};
  const auto d = run_sweep(c);
  std::vector<DualityPoint> frio, conc;
  for (std::size_t i = 0; i < d.points.size(); i += 2) {
    frio.push_back(d.points[i]);
    conc.push_back(d.points[i + 1]);
  }
  double frio_max = 0.0, conc_max = 0.0;
  for (const auto& p : frio) frio_max = std::max(frio_max, p.duality_sum);
  for (const auto& p : conc) conc_max = std::max(conc_max, p.duality_sum);
  EXPECT_GE(conc_max, frio_max - 1e-12);
  EXPECT_GE(boundary_envelope(conc, 50).back().k_center,
            boundary_envelope(frio, 50).back().k_center);
}

}  // namespace
}  // namespace duality_lab
