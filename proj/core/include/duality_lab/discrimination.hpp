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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "duality_lab/numeric.hpp"
#include "duality_lab/states.hpp"

namespace duality_lab {

/// Strategies for discriminating the detector states. Unambiguous (N = n)
/// and maximum-confidence (N > n) discrimination are kFrioStandard at xi = 1.
enum class Strategy {
  kMinimumError,
  kFrioStandard,
  kFrioConcatenated,
};

/// "me", "frio", "conc".
std::string_view to_string(Strategy strategy);
/// Inverse of to_string; throws ValidationError on unknown names.
Strategy parse_strategy(std::string_view name);

/// Below this, 1 - n*a_min^2 counts as zero and the failure branch of the
/// separation map is treated as absent.
inline constexpr double kDegenerateFailureTolerance = 1e-12;

/// Closed-form quantities of the optimal separation map at level xi.
struct SeparationParams {
  double xi = 0.0;
  double p_success = 1.0;
  double p_fail = 0.0;
  /// g_k(xi) >= 0, one per support index.
  std::vector<double> g;
  /// h_k >= 0, one per support index; empty when the failure branch is
  /// degenerate (uniform coefficients).
  std::optional<std::vector<double>> h;

  bool has_failure_branch() const { return h.has_value(); }
};

SeparationParams separation_params(const DetectorSpec& spec, double xi);

struct OutcomeLabel {
  enum class Kind { kConclusive, kFailureConclusive, kInconclusive };
  Kind kind = Kind::kConclusive;
  /// Guessed state index j; 0 for the inconclusive outcome.
  int index = 0;

  /// "conclusive:3", "failure:3" or "inconclusive".
  std::string to_string() const;
  friend auto operator<=>(const OutcomeLabel&, const OutcomeLabel&) = default;
};

struct MeasurementElement {
  OutcomeLabel label;
  CMatrix matrix;
};

/// A POVM on the N-dimensional detector space embedded from the span of the
/// support. Elements sum to the projector onto that span.
struct Measurement {
  Strategy strategy = Strategy::kMinimumError;
  double xi = 0.0;
  Support support;
  std::vector<MeasurementElement> elements;

  int num_paths() const { return support.num_paths(); }
};

Measurement build_me_measurement(const DetectorSpec& spec);
Measurement build_frio_standard(const DetectorSpec& spec, double xi);
Measurement build_frio_concatenated(const DetectorSpec& spec, double xi);
/// Dispatches on strategy; xi is ignored for kMinimumError.
Measurement build_measurement(const DetectorSpec& spec, Strategy strategy,
                              double xi);

/// Conclusive-outcome posterior p_{l|0}(xi) = |sum_k a_k g_k omega^{-k l}|^2.
std::vector<double> conditional_conclusive(const DetectorSpec& spec, double xi);

/// Posterior after a failed separation, p^f_{l|0} = |sum_k a_k h_k
/// omega^{-k l}|^2. Independent of xi. nullopt when the failure branch is
/// degenerate.
std::optional<std::vector<double>> conditional_failure(const DetectorSpec& spec);

/// Below this outcome probability the posterior is left undefined.
inline constexpr double kNegligibleOutcomeProbability = 1e-14;

struct OutcomeRow {
  OutcomeLabel label;
  double probability = 0.0;
  /// p_{l|label} for l = 0..N-1; nullopt when probability is negligible.
  std::optional<std::vector<double>> conditional;
};

struct OutcomeTable {
  std::vector<OutcomeRow> rows;

  const OutcomeRow* find(const OutcomeLabel& label) const;
};

/// Bayes-rule table computed by explicit matrix arithmetic:
/// p_j = Tr(Pi_j rho_d) and p_{l|j} = <alpha_l|Pi_j|alpha_l> / (N p_j),
/// with rho_d assembled from the states themselves.
OutcomeTable oracle_outcome_table(const SymmetricSet& set, const Measurement& m);

/// Diagnostics of the POVM conditions for a measurement.
struct PovmCheck {
  /// Smallest eigenvalue over all elements.
  double min_eigenvalue = 0.0;
  /// max |(sum Pi - P_support)_{ij}|.
  double completeness_residual = 0.0;
  /// max |Pi - Pi^dagger| over all elements.
  double hermiticity_residual = 0.0;

  bool ok(double tolerance = 1e-10) const {
    return min_eigenvalue >= -tolerance && completeness_residual <= tolerance &&
           hermiticity_residual <= tolerance;
  }
};

PovmCheck check_povm(const Measurement& m);

namespace detail {

/// Deliberate corruptions used to prove that the verification suites can
/// detect broken builders. Never set outside tests and `verify
/// --inject-fault`.
struct BuildFaults {
  /// Flip the sign of g_k on the first support index in the conclusive
  /// elements.
  bool flip_g_sign = false;
};

Measurement build_measurement(const DetectorSpec& spec, Strategy strategy,
                              double xi, const BuildFaults& faults);

}  // namespace detail

}  // namespace duality_lab
