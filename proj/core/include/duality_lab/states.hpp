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
#include <span>
#include <string>
#include <vector>

#include "duality_lab/numeric.hpp"

namespace duality_lab {

inline constexpr int kMinPaths = 2;
inline constexpr int kMaxPaths = 64;
/// Tolerance on sum(a_k^2) = 1 after construction.
inline constexpr double kNormTolerance = 1e-12;
/// Inputs whose norm is off by less than this are renormalized; larger
/// deviations are rejected.
inline constexpr double kRenormalizeTolerance = 1e-9;

/// Nonempty set of computational-basis indices in {0, ..., N-1}, stored in
/// ascending order.
class Support {
 public:
  /// Indices may be given in any order; duplicates or out-of-range values
  /// raise ValidationError.
  Support(int num_paths, std::vector<int> indices);

  int num_paths() const { return num_paths_; }
  std::size_t size() const { return indices_.size(); }
  std::span<const int> indices() const { return indices_; }
  int operator[](std::size_t i) const { return indices_[i]; }
  bool contains(int index) const;

  /// Differences between consecutive indices mod N, wrapping from the last
  /// index back to the first. Always sums to N.
  std::vector<int> cyclic_gaps() const;

  /// Dash-joined indices, e.g. "0-3".
  std::string to_string() const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  int num_paths_;
  std::vector<int> indices_;
};

/// Fiducial detector state sum_k a_k |k>: a support plus one strictly
/// positive real amplitude per support index, with sum a_k^2 = 1.
class DetectorSpec {
 public:
  static DetectorSpec from_amplitudes(Support support,
                                      std::vector<double> amplitudes);
  /// Probabilities a_k^2; converted to amplitudes.
  static DetectorSpec from_probabilities(Support support,
                                         std::span<const double> probabilities);
  /// a_k = 1/sqrt(n) on every support index.
  static DetectorSpec uniform(Support support);

  int num_paths() const { return support_.num_paths(); }
  int dimension() const { return static_cast<int>(support_.size()); }
  const Support& support() const { return support_; }
  std::span<const double> amplitudes() const { return amplitudes_; }
  double amplitude_min() const { return amplitude_min_; }
  std::vector<double> probabilities() const;

  friend bool operator==(const DetectorSpec&, const DetectorSpec&) = default;

 private:
  DetectorSpec(Support support, std::vector<double> amplitudes);

  Support support_;
  std::vector<double> amplitudes_;
  double amplitude_min_;
};

/// The N detector states |alpha_l> = sum_k a_k omega^{k l} |k>, held as the
/// columns of a dense N x N matrix (zero rows off the support).
class SymmetricSet {
 public:
  explicit SymmetricSet(DetectorSpec spec);

  const DetectorSpec& spec() const { return spec_; }
  int num_paths() const { return spec_.num_paths(); }
  const CMatrix& states() const { return states_; }
  auto state(int l) const { return states_.col(l); }

  /// Gram matrix G(l', l) = <alpha_l'|alpha_l>.
  CMatrix gram() const { return states_.adjoint() * states_; }

 private:
  DetectorSpec spec_;
  CMatrix states_;
};

SymmetricSet build_symmetric_set(const DetectorSpec& spec);

/// Diagonal of the reduced detector state in the computational basis,
/// listed over the support: {a_k^2}.
std::vector<double> detector_reduced_distribution(const DetectorSpec& spec);

/// All C(N, n) supports of size n in lexicographic order, each carrying
/// uniform amplitudes 1/sqrt(n).
std::vector<DetectorSpec> enumerate_uniform_specs(int num_paths, int dimension);

/// Calls visitor(indices) for every size-n subset of {0..N-1} in
/// lexicographic order without materializing the list.
template <typename Visitor>
void for_each_subset(int num_paths, int dimension, Visitor&& visitor) {
  std::vector<int> idx(static_cast<std::size_t>(dimension));
  for (int i = 0; i < dimension; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visitor(static_cast<const std::vector<int>&>(idx));
    int i = dimension - 1;
    while (i >= 0 &&
           idx[static_cast<std::size_t>(i)] == num_paths - dimension + i) {
      --i;
    }
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < dimension; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace duality_lab
