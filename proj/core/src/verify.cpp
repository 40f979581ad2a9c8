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

#include "duality_lab/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "duality_lab/duality.hpp"
#include "duality_lab/ensemble.hpp"
#include "duality_lab/error.hpp"
#include "duality_lab/saturation.hpp"
#include "duality_lab/serialization.hpp"

namespace duality_lab {
namespace {

constexpr std::size_t kMaxMessages = 5;
constexpr double kMatrixTolerance = 1e-10;
constexpr double kBoundTolerance = 1e-9;

class Suite {
 public:
  Suite(std::string name, bool gating) { result_.name = std::move(name); result_.gating = gating; }

  void check(bool passed, const DetectorSpec& spec, const std::string& what) {
    ++result_.checks;
    if (passed) return;
    ++result_.failures;
    if (result_.messages.size() < kMaxMessages) {
      result_.messages.push_back(what + " spec=" + spec_to_json(spec));
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string describe(Strategy s, double xi, const std::string& detail) {
  std::ostringstream os;
  os << to_string(s) << " xi=" << xi << ": " << detail;
  return os.str();
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return !s.gating || s.failures == 0; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.samples < 1) throw ValidationError("verify: samples must be >= 1");
  if (options.min_paths < kMinPaths || options.max_paths > kMaxPaths ||
      options.min_paths > options.max_paths) {
    throw ValidationError("verify: N range must satisfy 2 <= min <= max <= 64");
  }

  Suite povm("povm-completeness-positivity", true);
  Suite oracle("closed-form-oracle-agreement", true);
  Suite shift("cyclic-shift", true);
  Suite bound("duality-bound", true);
  Suite hierarchy("hierarchy-frio-conc-me-ceiling", true);
  Suite fourier("parseval-donoho-stark", true);
  Suite conc_me("conc-below-me", false);
  Suite monotone("monotone-in-xi", false);

  constexpr std::array<double, 5> kOracleXi{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto span = static_cast<std::uint64_t>(options.max_paths - options.min_paths + 1);

  for (std::size_t i = 0; i < options.samples; ++i) {
    Rng rng = Rng::for_stream(options.seed, i);
    const int big_n = options.min_paths + static_cast<int>(rng.below(span));
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(big_n)));
    const DetectorSpec spec = sample_spec(big_n, n, rng);
    const SymmetricSet set = build_symmetric_set(spec);

    for (double xi : kOracleXi) {
      for (Strategy strategy : {Strategy::kMinimumError, Strategy::kFrioStandard,
                                Strategy::kFrioConcatenated}) {
        if (strategy == Strategy::kMinimumError && xi != 0.0) continue;
        const Measurement m = detail::build_measurement(spec, strategy, xi, options.faults);
        const PovmCheck pc = check_povm(m);
        std::ostringstream detail;
        detail << "min eigenvalue " << pc.min_eigenvalue << ", completeness residual "
               << pc.completeness_residual << ", hermiticity residual "
               << pc.hermiticity_residual;
        povm.check(pc.ok(kMatrixTolerance), spec, describe(strategy, xi, detail.str()));

        const OutcomeTable table = oracle_outcome_table(set, m);
        const SeparationParams sep = separation_params(spec, strategy == Strategy::kMinimumError ? 0.0 : xi);
        const auto closed = conditional_conclusive(spec, m.xi);
        const auto closed_f = conditional_failure(spec);
        for (const auto& row : table.rows) {
          using Kind = OutcomeLabel::Kind;
          double expected_p = 0.0;
          switch (row.label.kind) {
            case Kind::kConclusive: expected_p = sep.p_success / big_n; break;
            case Kind::kFailureConclusive: expected_p = sep.p_fail / big_n; break;
            case Kind::kInconclusive: expected_p = sep.p_fail; break;
          }
          oracle.check(std::abs(row.probability - expected_p) <= kMatrixTolerance, spec,
                       describe(strategy, xi, row.label.to_string() + " probability " +
                                                  format_double(row.probability) + " vs " +
                                                  format_double(expected_p)));
          if (!row.conditional) continue;
          const auto& cond = *row.conditional;
          const int j = row.label.index;
          std::vector<double> reference(static_cast<std::size_t>(big_n), 1.0 / big_n);
          if (row.label.kind == Kind::kConclusive) {
            reference = closed;
          } else if (row.label.kind == Kind::kFailureConclusive && closed_f) {
            reference = *closed_f;
          }
          std::vector<double> shifted(cond.size());
          for (int l = 0; l < big_n; ++l) {
            const int src = row.label.kind == Kind::kInconclusive ? l : mod(l + j, big_n);
            shifted[static_cast<std::size_t>(l)] = cond[static_cast<std::size_t>(src)];
          }
          const double diff = max_abs_diff(shifted, reference);
          oracle.check(diff <= kMatrixTolerance, spec,
                       describe(strategy, xi, row.label.to_string() +
                                                  " posterior differs from closed form by " +
                                                  format_double(diff)));
          if (row.label.kind != Kind::kInconclusive && j > 0) {
            const OutcomeRow* base = table.find({row.label.kind, 0});
            if (base && base->conditional) {
              const double shift_diff = max_abs_diff(shifted, *base->conditional);
              shift.check(shift_diff <= 1e-12, spec,
                          describe(strategy, xi, row.label.to_string() +
                                                     " is not a cyclic shift of outcome 0 (" +
                                                     format_double(shift_diff) + ")"));
            }
          }
        }
      }
    }

    const double c = coherence(spec);
    const double ceiling = holevo_ceiling(spec);
    const double k_me = knowledge_me(spec);
    hierarchy.check(k_me <= ceiling + kBoundTolerance, spec,
                    "K_me " + format_double(k_me) + " exceeds ceiling " + format_double(ceiling));
    double prev_frio = 0.0, prev_conc = 0.0;
    for (int step = 0; step <= 10; ++step) {
      const double xi = step / 10.0;
      const double k_frio = knowledge_frio(spec, xi);
      const double k_conc = knowledge_concatenated(spec, xi);
      for (auto [s, k] : {std::pair{Strategy::kFrioStandard, k_frio},
                          std::pair{Strategy::kFrioConcatenated, k_conc}}) {
        bound.check(k >= -kBoundTolerance && k <= 1.0 + kBoundTolerance &&
                        c + k <= 1.0 + kBoundTolerance,
                    spec, describe(s, xi, "C + K = " + format_double(c + k)));
      }
      hierarchy.check(k_frio <= k_conc + kBoundTolerance, spec,
                      describe(Strategy::kFrioStandard, xi, "K_frio above K_conc"));
      conc_me.check(k_conc <= k_me + kBoundTolerance, spec,
                    describe(Strategy::kFrioConcatenated, xi,
                             "K_conc " + format_double(k_conc) + " above K_me " +
                                 format_double(k_me)));
      if (step > 0) {
        monotone.check(k_frio <= prev_frio + kBoundTolerance, spec,
                       describe(Strategy::kFrioStandard, xi, "K increased with xi"));
        monotone.check(k_conc <= prev_conc + kBoundTolerance, spec,
                       describe(Strategy::kFrioConcatenated, xi, "K increased with xi"));
      }
      prev_frio = k_frio;
      prev_conc = k_conc;
    }
    bound.check(c + k_me <= 1.0 + kBoundTolerance, spec,
                describe(Strategy::kMinimumError, 0.0, "C + K = " + format_double(c + k_me)));

    const SaturationReport sr = saturation_report(spec);
    double total = 0.0;
    for (double x : sr.lambda_sq) total += x;
    fourier.check(std::abs(total - 1.0) <= kMatrixTolerance, spec,
                  "Parseval sum " + format_double(total));
    fourier.check(sr.bound_ok, spec,
                  "n*|L| = " + std::to_string(sr.support_size * sr.lambda_support_size) +
                      " < N");
  }

  VerifyReport report;
  for (Suite* s : {&povm, &oracle, &shift, &bound, &hierarchy, &fourier, &conc_me, &monotone}) {
    report.suites.push_back(s->take());
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& s : report.suites) {
    const char* status = s.failures == 0 ? "PASS" : (s.gating ? "FAIL" : "NOTE");
    out << status << ' ' << s.name << ": " << s.checks - s.failures << '/' << s.checks
        << " checks hold" << (s.gating ? "" : " (informational)") << '\n';
    for (const auto& m : s.messages) out << "  " << m << '\n';
  }
  out << (report.ok() ? "verify: all gating suites passed" : "verify: violations found") << '\n';
}

}  // namespace duality_lab
