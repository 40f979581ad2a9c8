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

#include "duality_lab/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/SVD>

#include "duality_lab/duality.hpp"
#include "duality_lab/error.hpp"
#include "duality_lab/parallel.hpp"

namespace duality_lab {

std::string_view to_string(SupportStructure structure) {
  switch (structure) {
    case SupportStructure::kEquallySpaced:
      return "equally-spaced";
    case SupportStructure::kUnequallySpacedAdjacent:
      return "adjacent";
    case SupportStructure::kUnequallySpacedNonadjacent:
      return "nonadjacent";
    case SupportStructure::kOther:
      return "other";
  }
  return "other";
}

std::vector<double> dft_distribution(const DetectorSpec& spec) {
  const int big_n = spec.num_paths();
  const auto& support = spec.support();
  const auto a = spec.amplitudes();
  std::vector<double> out(static_cast<std::size_t>(big_n));
  for (int l = 0; l < big_n; ++l) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < support.size(); ++i) {
      acc += a[i] * root_of_unity(big_n, std::int64_t{support[i]} * l);
    }
    out[static_cast<std::size_t>(l)] = std::norm(acc) / big_n;
  }
  return out;
}

DetectorSpec saturating_spec(int num_paths, int spacing, int shift) {
  if (num_paths < kMinPaths || num_paths > kMaxPaths) {
    throw ValidationError("saturating_spec: N must lie in [2, 64]");
  }
  if (spacing < 1 || num_paths % spacing != 0) {
    throw ValidationError("saturating_spec: spacing m must divide N");
  }
  if (shift < 0 || shift >= spacing) {
    throw ValidationError("saturating_spec: shift tau must lie in [0, m)");
  }
  const int n = num_paths / spacing;
  std::vector<int> indices(static_cast<std::size_t>(n));
  for (int kappa = 0; kappa < n; ++kappa) {
    indices[static_cast<std::size_t>(kappa)] = shift + kappa * spacing;
  }
  return DetectorSpec::uniform(Support(num_paths, std::move(indices)));
}

SaturationCheck is_saturating(const DetectorSpec& spec) {
  const double sum = shannon_entropy(spec.probabilities()) +
                     shannon_entropy(dft_distribution(spec));
  const double target = std::log2(static_cast<double>(spec.num_paths()));
  return {std::abs(sum - target) <= kSaturationTolerance, sum};
}

SupportStructure classify_support(const Support& support) {
  const std::vector<int> gaps = support.cyclic_gaps();
  if (std::adjacent_find(gaps.begin(), gaps.end(), std::not_equal_to<>()) ==
      gaps.end()) {
    return SupportStructure::kEquallySpaced;
  }
  const auto unit_gaps = std::count(gaps.begin(), gaps.end(), 1);
  if (unit_gaps == 0) return SupportStructure::kUnequallySpacedNonadjacent;
  // One contiguous cyclic run: every gap is 1 except the wrap-around one.
  if (unit_gaps == static_cast<long>(gaps.size()) - 1) {
    return SupportStructure::kUnequallySpacedAdjacent;
  }
  return SupportStructure::kOther;
}

std::vector<int> saturating_dimensions(int num_paths) {
  if (num_paths < kMinPaths) {
    throw ValidationError("saturating_dimensions: N must be >= 2");
  }
  std::vector<int> out;
  for (int n = 2; n < num_paths; ++n) {
    if (num_paths % n == 0) out.push_back(n);
  }
  return out;
}

SaturationReport saturation_report(const DetectorSpec& spec) {
  SaturationReport r{spec.support(), dft_distribution(spec)};
  r.support_size = spec.dimension();
  r.lambda_support_size = static_cast<int>(
      std::count_if(r.lambda_sq.begin(), r.lambda_sq.end(),
                    [](double x) { return x > kLambdaSupportThreshold; }));
  r.bound_ok = r.support_size * r.lambda_support_size >= spec.num_paths();
  r.entropy_sum = shannon_entropy(spec.probabilities()) + shannon_entropy(r.lambda_sq);
  r.saturating = std::abs(r.entropy_sum - std::log2(static_cast<double>(spec.num_paths()))) <=
                 kSaturationTolerance;
  r.structure = classify_support(spec.support());
  return r;
}

void saturation_scan_each(int num_paths,
                          const std::function<void(const SaturationReport&)>& visitor,
                          unsigned threads) {
  if (num_paths < kMinPaths) {
    throw ValidationError("saturation_scan: N must be >= 2");
  }
  if (num_paths > kMaxScanPaths) {
    throw BudgetError("saturation_scan: N = " + std::to_string(num_paths) +
                      " exceeds the enumeration budget (N <= 24)");
  }
  constexpr std::size_t kBatch = 1 << 14;
  std::vector<std::vector<int>> pending;
  pending.reserve(kBatch);
  std::vector<SaturationReport> reports;

  auto flush = [&] {
    reports.assign(pending.size(), SaturationReport{Support(num_paths, {0}), {}});
    parallel_for_blocks(pending.size(), threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        reports[i] = saturation_report(DetectorSpec::uniform(Support(num_paths, pending[i])));
      }
    });
    for (const auto& r : reports) visitor(r);
    pending.clear();
  };

  for (int n = 1; n <= num_paths; ++n) {
    for_each_subset(num_paths, n, [&](const std::vector<int>& idx) {
      pending.push_back(idx);
      if (pending.size() == kBatch) flush();
    });
  }
  if (!pending.empty()) flush();
}

std::vector<SaturationReport> saturation_scan(int num_paths, unsigned threads) {
  std::vector<SaturationReport> out;
  saturation_scan_each(
      num_paths, [&](const SaturationReport& r) { out.push_back(r); }, threads);
  return out;
}

std::vector<double> schmidt_coefficients(const DetectorSpec& spec) {
  const SymmetricSet set = build_symmetric_set(spec);
  // Row l holds the detector amplitudes paired with path l.
  const CMatrix joint =
      set.states().transpose() / std::sqrt(static_cast<double>(spec.num_paths()));
  Eigen::JacobiSVD<CMatrix> svd(joint);
  const auto& values = svd.singularValues();
  return {values.data(), values.data() + values.size()};
}

}  // namespace duality_lab
