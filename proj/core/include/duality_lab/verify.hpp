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
#include <ostream>
#include <string>
#include <vector>

#include "duality_lab/discrimination.hpp"

namespace duality_lab {

struct VerifyOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int min_paths = 2;
  int max_paths = 8;
  /// Test hook; see detail::BuildFaults.
  detail::BuildFaults faults;
};

struct SuiteResult {
  std::string name;
  /// Gating suites decide the verdict. Non-gating suites track relations
  /// that are expected to hold only approximately and are reported for
  /// information.
  bool gating = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// First few violations, each with the offending spec as JSON.
  std::vector<std::string> messages;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool ok() const;
};

/// Runs the invariant suites over `samples` seeded random specs:
/// POVM positivity and completeness, closed-form/oracle agreement (posteriors
/// and outcome probabilities), cyclic shift of posteriors, the duality bound,
/// the provable part of the strategy hierarchy, Parseval and the discrete
/// uncertainty bound. K_conc <= K_me and monotonicity in xi are reported as
/// non-gating suites.
VerifyReport run_verification(const VerifyOptions& options);

/// One line per suite, then the retained violation messages.
void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace duality_lab
