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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "duality_lab/error.hpp"
#include "duality_lab/parallel.hpp"

namespace duality_lab {

unsigned default_worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DUALITY_LAB_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) {
      workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
  }
  return workers;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(mix64(mix64(seed) ^ mix64(stream ^ 0xd1b54a32d192ed03ULL)));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("Rng::below: bound must be positive");
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= limit) return x % bound;
  }
}

double Rng::exponential() {
  while (true) {
    const double u = uniform();
    const double e = -std::log1p(-u);
    if (e > 0.0) return e;
  }
}

DetectorSpec sample_spec(int num_paths, int dimension, Rng& rng) {
  if (num_paths < kMinPaths || num_paths > kMaxPaths) {
    throw ValidationError("sample_spec: N must lie in [2, 64]");
  }
  if (dimension < 1 || dimension > num_paths) {
    throw ValidationError("sample_spec: need 1 <= n <= N");
  }
  std::vector<int> pool(static_cast<std::size_t>(num_paths));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < dimension; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   rng.below(static_cast<std::uint64_t>(num_paths - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  std::vector<int> indices(pool.begin(), pool.begin() + dimension);
  std::sort(indices.begin(), indices.end());

  std::vector<double> weights(static_cast<std::size_t>(dimension));
  for (double& w : weights) w = rng.exponential();
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return DetectorSpec::from_probabilities(Support(num_paths, std::move(indices)),
                                          weights);
}

std::vector<DetectorSpec> two_path_grid(int steps) {
  if (steps < 1) throw ValidationError("two_path_grid: steps must be >= 1");
  std::vector<DetectorSpec> specs;
  specs.reserve(static_cast<std::size_t>(steps) + 1);
  specs.push_back(DetectorSpec::uniform(Support(2, {0})));
  for (int i = 1; i <= steps; ++i) {
    const double a_min_sq = 0.5 * i / steps;
    const double probs[] = {1.0 - a_min_sq, a_min_sq};
    specs.push_back(DetectorSpec::from_probabilities(Support(2, {0, 1}), probs));
  }
  return specs;
}

void SweepConfig::validate() const {
  if (num_paths < kMinPaths || num_paths > kMaxPaths) {
    throw ValidationError("sweep: N must lie in [2, 64]");
  }
  if (dimension && (*dimension < 1 || *dimension > num_paths)) {
    throw ValidationError("sweep: need 1 <= n <= N");
  }
  if (grid_steps) {
    if (num_paths != 2) throw ValidationError("sweep: grid mode requires N = 2");
    if (*grid_steps < 1) throw ValidationError("sweep: grid steps must be >= 1");
  } else if (samples < 1) {
    throw ValidationError("sweep: samples must be >= 1");
  }
  if (strategies.empty()) throw ValidationError("sweep: no strategies given");
  for (const auto& s : strategies) {
    if (!(s.xi >= 0.0 && s.xi <= 1.0)) {
      throw ValidationError("sweep: every xi must lie in [0, 1]");
    }
  }
  if (envelope_bins == 1) throw ValidationError("sweep: envelope needs >= 2 bins");
}

namespace {

std::vector<DetectorSpec> uniform_overlay(const SweepConfig& config) {
  std::vector<DetectorSpec> specs;
  const int max_n = config.dimension.value_or(config.num_paths);
  for (int n = 1; n <= max_n; ++n) {
    auto batch = enumerate_uniform_specs(config.num_paths, n);
    specs.insert(specs.end(), std::make_move_iterator(batch.begin()),
                 std::make_move_iterator(batch.end()));
  }
  return specs;
}

}  // namespace

ScatterDataset run_sweep(const SweepConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  const std::vector<DetectorSpec> fixed_specs =
      config.grid_steps ? two_path_grid(*config.grid_steps) : std::vector<DetectorSpec>{};
  const std::size_t sampled = config.grid_steps ? fixed_specs.size() : config.samples;
  const std::vector<DetectorSpec> overlay =
      config.include_uniform_enumeration ? uniform_overlay(config)
                                         : std::vector<DetectorSpec>{};
  const std::size_t total_specs = sampled + overlay.size();
  const std::size_t per_spec = config.strategies.size();

  ScatterDataset out;
  out.config = config;
  out.points.resize(total_specs * per_spec);

  parallel_for_blocks(total_specs, config.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto evaluate = [&](const DetectorSpec& spec) {
        for (std::size_t s = 0; s < per_spec; ++s) {
          try {
            out.points[i * per_spec + s] = evaluate_point(
                spec, config.strategies[s].strategy, config.strategies[s].xi);
          } catch (const std::exception& e) {
            throw std::runtime_error("sweep: spec " + std::to_string(i) +
                                     " (support " + spec.support().to_string() +
                                     ") failed: " + e.what());
          }
        }
      };
      if (i < sampled) {
        if (config.grid_steps) {
          evaluate(fixed_specs[i]);
        } else {
          Rng rng = Rng::for_stream(config.seed, i);
          const int n = config.dimension
                            ? *config.dimension
                            : 1 + static_cast<int>(rng.below(
                                      static_cast<std::uint64_t>(config.num_paths)));
          evaluate(sample_spec(config.num_paths, n, rng));
        }
      } else {
        evaluate(overlay[i - sampled]);
      }
    }
  });

  if (config.envelope_bins >= 2) {
    out.envelope = boundary_envelope(out.points, config.envelope_bins);
  }
  out.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<EnvelopeBin> boundary_envelope(std::span<const DualityPoint> points,
                                           std::size_t bins) {
  if (points.empty()) throw ValidationError("boundary_envelope: no points");
  if (bins < 2) throw ValidationError("boundary_envelope: need at least 2 bins");
  std::vector<EnvelopeBin> all(bins);
  const double width = 1.0 / static_cast<double>(bins);
  for (std::size_t b = 0; b < bins; ++b) all[b].k_center = (b + 0.5) * width;
  for (const auto& p : points) {
    const double k = std::clamp(p.knowledge, 0.0, 1.0);
    const auto b = std::min(bins - 1, static_cast<std::size_t>(k * bins));
    auto& bin = all[b];
    if (bin.count == 0) {
      bin.c_min = bin.c_max = p.coherence;
    } else {
      bin.c_min = std::min(bin.c_min, p.coherence);
      bin.c_max = std::max(bin.c_max, p.coherence);
    }
    ++bin.count;
  }
  std::vector<EnvelopeBin> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [](const EnvelopeBin& b) { return b.count > 0; });
  return out;
}

}  // namespace duality_lab
