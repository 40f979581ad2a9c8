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

#include <functional>
#include <string_view>
#include <vector>

#include "duality_lab/states.hpp"

namespace duality_lab {

/// |lambda_l|^2 entries at or below this are structural zeros.
inline constexpr double kLambdaSupportThreshold = 1e-12;
/// Tolerance on H({a_k^2}) + H({|lambda_l|^2}) = log2 N.
inline constexpr double kSaturationTolerance = 1e-9;
/// Largest N accepted by saturation_scan (2^N - 1 uniform supports).
inline constexpr int kMaxScanPaths = 24;

enum class SupportStructure {
  kEquallySpaced,
  kUnequallySpacedAdjacent,
  kUnequallySpacedNonadjacent,
  kOther,
};

/// "equally-spaced", "adjacent", "nonadjacent", "other".
std::string_view to_string(SupportStructure structure);

/// |lambda_l|^2 = (1/N) |sum_k a_k omega^{k l}|^2, the squared DFT of the
/// amplitude vector. Sums to 1 by Parseval.
std::vector<double> dft_distribution(const DetectorSpec& spec);

/// Uniform spec on the equally spaced support {tau + kappa*m : kappa < N/m}.
DetectorSpec saturating_spec(int num_paths, int spacing, int shift);

struct SaturationCheck {
  bool saturating = false;
  double entropy_sum = 0.0;
};

SaturationCheck is_saturating(const DetectorSpec& spec);

/// Cyclic-gap classification. Equal gaps give kEquallySpaced; otherwise a
/// single contiguous cyclic run is kUnequallySpacedAdjacent, a set with no
/// two cyclically adjacent indices is kUnequallySpacedNonadjacent, and
/// anything mixed is kOther.
SupportStructure classify_support(const Support& support);

/// Nontrivial divisors n of N (1 < n < N), ascending. Their count is
/// eta(N) - 2.
std::vector<int> saturating_dimensions(int num_paths);

struct SaturationReport {
  Support support;
  std::vector<double> lambda_sq;
  int support_size = 0;
  int lambda_support_size = 0;
  /// n * |L| >= N.
  bool bound_ok = false;
  double entropy_sum = 0.0;
  bool saturating = false;
  SupportStructure structure = SupportStructure::kOther;
};

SaturationReport saturation_report(const DetectorSpec& spec);

/// Reports for every uniform spec of every dimension n = 1..N, ordered by n
/// then lexicographically by support. Work is spread over `threads` workers
/// (0 means the default worker count) with an ordered merge.
std::vector<SaturationReport> saturation_scan(int num_paths, unsigned threads = 0);

/// Streaming form of saturation_scan: the visitor sees reports in the same
/// order without the full list being held in memory.
void saturation_scan_each(int num_paths,
                          const std::function<void(const SaturationReport&)>& visitor,
                          unsigned threads = 0);

/// Singular values (descending) of the N x N joint amplitude array
/// Psi(l, k) = <l|_q <k|_d |Psi>.
std::vector<double> schmidt_coefficients(const DetectorSpec& spec);

}  // namespace duality_lab
