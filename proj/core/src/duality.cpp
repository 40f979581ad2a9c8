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

#include "duality_lab/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "duality_lab/error.hpp"

namespace duality_lab {
namespace {

double log2_paths(int num_paths) {
  if (num_paths < 2) {
    throw ValidationError("normalization needs N >= 2 (log2 N must be positive)");
  }
  return std::log2(static_cast<double>(num_paths));
}

}  // namespace

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  for (double x : p) {
    if (x < -1e-12 || !std::isfinite(x)) {
      throw ValidationError("shannon_entropy: entries must be nonnegative");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("shannon_entropy: probabilities must sum to 1, got " +
                          std::to_string(total));
  }
  double h = 0.0;
  for (double x : p) {
    const double q = std::clamp(x, 0.0, 1.0);
    if (q > 0.0) h -= q * std::log2(q);
  }
  return std::max(h, 0.0);
}

double normalized_entropy_deficit(std::span<const double> p, int num_paths) {
  return 1.0 - shannon_entropy(p) / log2_paths(num_paths);
}

double coherence(const DetectorSpec& spec) {
  return normalized_entropy_deficit(detector_reduced_distribution(spec),
                                    spec.num_paths());
}

double knowledge_frio(const DetectorSpec& spec, double xi) {
  const SeparationParams sep = separation_params(spec, xi);
  return sep.p_success *
         normalized_entropy_deficit(conditional_conclusive(spec, xi), spec.num_paths());
}

double knowledge_concatenated(const DetectorSpec& spec, double xi) {
  const double base = knowledge_frio(spec, xi);
  const auto failure = conditional_failure(spec);
  if (!failure) return base;
  const SeparationParams sep = separation_params(spec, xi);
  return base + sep.p_fail * normalized_entropy_deficit(*failure, spec.num_paths());
}

double knowledge_me(const DetectorSpec& spec) { return knowledge_frio(spec, 0.0); }

double knowledge(const DetectorSpec& spec, Strategy strategy, double xi) {
  switch (strategy) {
    case Strategy::kMinimumError:
      return knowledge_me(spec);
    case Strategy::kFrioStandard:
      return knowledge_frio(spec, xi);
    case Strategy::kFrioConcatenated:
      return knowledge_concatenated(spec, xi);
  }
  throw ValidationError("knowledge: unknown strategy");
}

double knowledge_from_table(const OutcomeTable& table, int num_paths) {
  double conditional_entropy = 0.0;
  for (const auto& row : table.rows) {
    if (!row.conditional) continue;
    conditional_entropy += row.probability * shannon_entropy(*row.conditional);
  }
  return 1.0 - conditional_entropy / log2_paths(num_paths);
}

double holevo_ceiling(const DetectorSpec& spec) { return 1.0 - coherence(spec); }

DualityPoint evaluate_point(const DetectorSpec& spec, Strategy strategy,
                            double xi) {
  DualityPoint point;
  point.num_paths = spec.num_paths();
  point.dimension = spec.dimension();
  point.strategy = strategy;
  point.xi = strategy == Strategy::kMinimumError ? 0.0 : xi;
  point.coherence = coherence(spec);
  point.knowledge = knowledge(spec, strategy, point.xi);
  point.duality_sum = point.coherence + point.knowledge;
  point.support = spec.support();
  return point;
}

}  // namespace duality_lab
