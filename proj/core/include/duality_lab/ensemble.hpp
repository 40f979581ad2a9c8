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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "duality_lab/discrimination.hpp"
#include "duality_lab/duality.hpp"
#include "duality_lab/states.hpp"

namespace duality_lab {

/// Seeded generator built on std::mt19937_64, whose output sequence is fixed
/// by the standard. Distributions are implemented here rather than with the
/// <random> distribution classes so draws are identical across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for work item `stream` under a master seed. Stream
  /// i is the same no matter which worker consumes it.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound), rejection sampled.
  std::uint64_t below(std::uint64_t bound);
  /// Unit-rate exponential, strictly positive.
  double exponential();

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Support uniform over the C(N, n) subsets; probabilities {a_k^2} uniform on
/// the (n-1)-simplex via normalized exponentials.
DetectorSpec sample_spec(int num_paths, int dimension, Rng& rng);

/// Two-path coefficient grid: a_min^2 = i / (2 * steps) for i = 0..steps.
/// i = 0 is the single-index support {0}.
std::vector<DetectorSpec> two_path_grid(int steps);

struct StrategyChoice {
  Strategy strategy = Strategy::kMinimumError;
  double xi = 0.0;
};

struct SweepConfig {
  int num_paths = 2;
  /// Detector dimension n; nullopt draws n uniformly from 1..N per sample.
  std::optional<int> dimension;
  std::size_t samples = 1;
  std::vector<StrategyChoice> strategies{{Strategy::kMinimumError, 0.0}};
  std::uint64_t seed = 0;
  /// Append every uniform spec with n' = 1..n (or 1..N).
  bool include_uniform_enumeration = false;
  /// When set, replaces random sampling with two_path_grid(steps); N must
  /// be 2.
  std::optional<int> grid_steps;
  /// Envelope bins; 0 disables the envelope.
  std::size_t envelope_bins = 200;
  /// 0 means default_worker_count().
  unsigned threads = 0;

  /// Throws ValidationError on an invalid configuration.
  void validate() const;
};

struct EnvelopeBin {
  double k_center = 0.0;
  double c_min = 0.0;
  double c_max = 0.0;
  std::size_t count = 0;
};

struct ScatterDataset {
  SweepConfig config;
  /// Ordered by spec index, then by position in config.strategies.
  std::vector<DualityPoint> points;
  std::optional<std::vector<EnvelopeBin>> envelope;
  double wall_time_seconds = 0.0;
};

ScatterDataset run_sweep(const SweepConfig& config);

/// Equal-width bins over K in [0, 1]; one entry per nonempty bin with the
/// extreme coherence values seen there.
std::vector<EnvelopeBin> boundary_envelope(std::span<const DualityPoint> points,
                                           std::size_t bins);

}  // namespace duality_lab
