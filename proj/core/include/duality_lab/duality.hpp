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

#include <span>
#include <vector>

#include "duality_lab/discrimination.hpp"
#include "duality_lab/states.hpp"

namespace duality_lab {

/// Shannon entropy in bits with 0 log 0 = 0. Entries down to -1e-12 are
/// clamped to zero; the sum must be 1 within 1e-9.
double shannon_entropy(std::span<const double> p);

/// 1 - H(p) / log2(N).
double normalized_entropy_deficit(std::span<const double> p, int num_paths);

/// Normalized relative entropy of coherence of the quanton,
/// C = 1 - H({a_k^2}) / log2(N).
double coherence(const DetectorSpec& spec);

/// K for standard FRIO: P_s(xi) * (1 - H(p_{.|0}(xi)) / log2 N).
double knowledge_frio(const DetectorSpec& spec, double xi);

/// K for concatenated FRIO: the standard value plus the failure-branch term
/// P_f(xi) * (1 - H(p^f_{.|0}) / log2 N).
double knowledge_concatenated(const DetectorSpec& spec, double xi);

/// K for minimum-error (square-root) discrimination.
double knowledge_me(const DetectorSpec& spec);

double knowledge(const DetectorSpec& spec, Strategy strategy, double xi);

/// Mutual information route: K = 1 - sum_j p_j H(p_{.|j}) / log2 N from an
/// explicit outcome table. Rows with undefined posteriors contribute
/// nothing (their weight is below the negligible threshold).
double knowledge_from_table(const OutcomeTable& table, int num_paths);

/// Holevo ceiling on K, equal to 1 - C.
double holevo_ceiling(const DetectorSpec& spec);

struct DualityPoint {
  int num_paths = 0;
  int dimension = 0;
  Strategy strategy = Strategy::kMinimumError;
  double xi = 0.0;
  double coherence = 0.0;
  double knowledge = 0.0;
  double duality_sum = 0.0;
  Support support{2, {0}};
};

DualityPoint evaluate_point(const DetectorSpec& spec, Strategy strategy,
                            double xi);

}  // namespace duality_lab
