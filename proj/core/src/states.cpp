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

#include "duality_lab/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "duality_lab/error.hpp"

namespace duality_lab {

Support::Support(int num_paths, std::vector<int> indices)
    : num_paths_(num_paths), indices_(std::move(indices)) {
  if (num_paths_ < kMinPaths || num_paths_ > kMaxPaths) {
    throw ValidationError("support: path count N must lie in [2, 64], got " +
                          std::to_string(num_paths_));
  }
  if (indices_.empty()) {
    throw ValidationError("support: index set must be nonempty");
  }
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw ValidationError("support: indices must be distinct");
  }
  if (indices_.front() < 0 || indices_.back() >= num_paths_) {
    throw ValidationError("support: indices must lie in {0, ..., N-1}");
  }
}

bool Support::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::vector<int> Support::cyclic_gaps() const {
  std::vector<int> gaps(indices_.size());
  for (std::size_t i = 0; i + 1 < indices_.size(); ++i) {
    gaps[i] = indices_[i + 1] - indices_[i];
  }
  gaps.back() = indices_.front() + num_paths_ - indices_.back();
  return gaps;
}

std::string Support::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(indices_[i]);
  }
  return out;
}

DetectorSpec::DetectorSpec(Support support, std::vector<double> amplitudes)
    : support_(std::move(support)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != support_.size()) {
    throw ValidationError(
        "detector spec: need exactly one coefficient per support index");
  }
  for (double a : amplitudes_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw ValidationError(
          "detector spec: coefficients must be strictly positive (shrink the "
          "support instead of passing zeros)");
    }
  }
  const double norm_sq = std::transform_reduce(
      amplitudes_.begin(), amplitudes_.end(), 0.0, std::plus<>(),
      [](double a) { return a * a; });
  if (std::abs(norm_sq - 1.0) > kRenormalizeTolerance) {
    throw ValidationError("detector spec: sum of squared coefficients must be 1, got " +
                          std::to_string(norm_sq));
  }
  if (norm_sq != 1.0) {
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (double& a : amplitudes_) a *= scale;
  }
  amplitude_min_ = *std::min_element(amplitudes_.begin(), amplitudes_.end());
}

DetectorSpec DetectorSpec::from_amplitudes(Support support,
                                           std::vector<double> amplitudes) {
  return DetectorSpec(std::move(support), std::move(amplitudes));
}

DetectorSpec DetectorSpec::from_probabilities(
    Support support, std::span<const double> probabilities) {
  std::vector<double> amplitudes(probabilities.size());
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (!(probabilities[i] > 0.0)) {
      throw ValidationError(
          "detector spec: probabilities must be strictly positive");
    }
    amplitudes[i] = std::sqrt(probabilities[i]);
  }
  return DetectorSpec(std::move(support), std::move(amplitudes));
}

DetectorSpec DetectorSpec::uniform(Support support) {
  const std::size_t n = support.size();
  std::vector<double> amplitudes(n, 1.0 / std::sqrt(static_cast<double>(n)));
  return DetectorSpec(std::move(support), std::move(amplitudes));
}

std::vector<double> DetectorSpec::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                 [](double a) { return a * a; });
  return p;
}

SymmetricSet::SymmetricSet(DetectorSpec spec)
    : spec_(std::move(spec)),
      states_(CMatrix::Zero(spec_.num_paths(), spec_.num_paths())) {
  const int big_n = spec_.num_paths();
  const auto& support = spec_.support();
  const auto amplitudes = spec_.amplitudes();
  for (int l = 0; l < big_n; ++l) {
    for (std::size_t i = 0; i < support.size(); ++i) {
      const int k = support[i];
      states_(k, l) = amplitudes[i] * root_of_unity(big_n, std::int64_t{k} * l);
    }
  }
}

SymmetricSet build_symmetric_set(const DetectorSpec& spec) {
  return SymmetricSet(spec);
}

std::vector<double> detector_reduced_distribution(const DetectorSpec& spec) {
  return spec.probabilities();
}

std::vector<DetectorSpec> enumerate_uniform_specs(int num_paths, int dimension) {
  if (num_paths < kMinPaths || num_paths > kMaxPaths) {
    throw ValidationError("enumerate_uniform_specs: N must lie in [2, 64]");
  }
  if (dimension < 1 || dimension > num_paths) {
    throw ValidationError("enumerate_uniform_specs: need 1 <= n <= N");
  }
  std::vector<DetectorSpec> specs;
  for_each_subset(num_paths, dimension, [&](const std::vector<int>& idx) {
    specs.push_back(DetectorSpec::uniform(Support(num_paths, idx)));
  });
  return specs;
}

}  // namespace duality_lab
