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

#include "duality_lab/discrimination.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "duality_lab/error.hpp"

namespace duality_lab {
namespace {

void require_xi(double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw ValidationError("separation level xi must lie in [0, 1], got " +
                          std::to_string(xi));
  }
}

// sum_k c_k omega^{j k} |k> over the support, scaled by `scale`.
CVector fourier_ket(const Support& support, std::span<const double> coeffs,
                    int j, double scale) {
  const int big_n = support.num_paths();
  CVector v = CVector::Zero(big_n);
  for (std::size_t i = 0; i < support.size(); ++i) {
    const int k = support[i];
    v(k) = scale * coeffs[i] * root_of_unity(big_n, std::int64_t{j} * k);
  }
  return v;
}

// |sum_k a_k c_k omega^{-k l}|^2 for l = 0..N-1.
std::vector<double> fourier_posterior(const DetectorSpec& spec,
                                      std::span<const double> coeffs) {
  const int big_n = spec.num_paths();
  const auto& support = spec.support();
  const auto a = spec.amplitudes();
  std::vector<double> p(static_cast<std::size_t>(big_n));
  for (int l = 0; l < big_n; ++l) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < support.size(); ++i) {
      acc += a[i] * coeffs[i] *
             root_of_unity(big_n, -std::int64_t{support[i]} * l);
    }
    p[static_cast<std::size_t>(l)] = std::norm(acc);
  }
  return p;
}

MeasurementElement rank_one(OutcomeLabel label, const CVector& ket) {
  return {label, ket * ket.adjoint()};
}

OutcomeLabel conclusive(int j) {
  return {OutcomeLabel::Kind::kConclusive, j};
}
OutcomeLabel failure_conclusive(int j) {
  return {OutcomeLabel::Kind::kFailureConclusive, j};
}

// Columns phi_j(xi), j = 0..N-1.
CMatrix success_kets(const DetectorSpec& spec, const SeparationParams& sep,
                     const detail::BuildFaults& faults) {
  const int big_n = spec.num_paths();
  std::vector<double> g = sep.g;
  if (faults.flip_g_sign) g.front() = -g.front();
  CMatrix kets(big_n, big_n);
  for (int j = 0; j < big_n; ++j) {
    kets.col(j) = fourier_ket(spec.support(), g, j, std::sqrt(sep.p_success));
  }
  return kets;
}

// Columns phi^f_j(xi); zero when the failure branch is absent.
CMatrix failure_kets(const DetectorSpec& spec, const SeparationParams& sep) {
  const int big_n = spec.num_paths();
  CMatrix kets = CMatrix::Zero(big_n, big_n);
  if (!sep.h) return kets;
  for (int j = 0; j < big_n; ++j) {
    kets.col(j) = fourier_ket(spec.support(), *sep.h, j, std::sqrt(sep.p_fail));
  }
  return kets;
}

// Columns u_j = n^{-1/2} sum_k omega^{j k} |k>.
CMatrix uniform_kets(const Support& support) {
  const int big_n = support.num_paths();
  const std::vector<double> ones(support.size(), 1.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(support.size()));
  CMatrix kets(big_n, big_n);
  for (int j = 0; j < big_n; ++j) {
    kets.col(j) = fourier_ket(support, ones, j, scale);
  }
  return kets;
}

}  // namespace

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kMinimumError:
      return "me";
    case Strategy::kFrioStandard:
      return "frio";
    case Strategy::kFrioConcatenated:
      return "conc";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "me") return Strategy::kMinimumError;
  if (name == "frio") return Strategy::kFrioStandard;
  if (name == "conc") return Strategy::kFrioConcatenated;
  throw ValidationError("unknown strategy '" + std::string(name) +
                        "' (expected me, frio or conc)");
}

SeparationParams separation_params(const DetectorSpec& spec, double xi) {
  require_xi(xi);
  const double n = spec.dimension();
  const double big_n = spec.num_paths();
  const double a_min_sq = spec.amplitude_min() * spec.amplitude_min();
  const double s = n * a_min_sq;
  const auto a = spec.amplitudes();

  SeparationParams out;
  out.xi = xi;
  const bool degenerate = 1.0 - s <= kDegenerateFailureTolerance;
  if (degenerate) {
    out.p_success = 1.0;
    out.p_fail = 0.0;
  } else {
    out.p_success = s / ((1.0 - xi) * s + xi);
    out.p_fail = 1.0 - out.p_success;
  }

  out.g.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double a_sq = a[i] * a[i];
    out.g[i] = std::sqrt((1.0 - xi + xi / (n * a_sq)) / big_n);
  }

  if (!degenerate) {
    std::vector<double> h(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] - spec.amplitude_min() <= 1e-12) {
        h[i] = 0.0;
        continue;
      }
      const double a_sq = a[i] * a[i];
      h[i] = std::sqrt((a_sq - a_min_sq) / ((1.0 - s) * big_n * a_sq));
    }
    out.h = std::move(h);
  }
  return out;
}

std::string OutcomeLabel::to_string() const {
  switch (kind) {
    case Kind::kConclusive:
      return "conclusive:" + std::to_string(index);
    case Kind::kFailureConclusive:
      return "failure:" + std::to_string(index);
    case Kind::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

Measurement build_me_measurement(const DetectorSpec& spec) {
  const int big_n = spec.num_paths();
  const double weight = static_cast<double>(spec.dimension()) / big_n;
  const CMatrix u = uniform_kets(spec.support());
  Measurement m{Strategy::kMinimumError, 0.0, spec.support(), {}};
  m.elements.reserve(static_cast<std::size_t>(big_n));
  for (int j = 0; j < big_n; ++j) {
    m.elements.push_back({conclusive(j), weight * u.col(j) * u.col(j).adjoint()});
  }
  return m;
}

Measurement build_frio_standard(const DetectorSpec& spec, double xi) {
  return detail::build_measurement(spec, Strategy::kFrioStandard, xi, {});
}

Measurement build_frio_concatenated(const DetectorSpec& spec, double xi) {
  return detail::build_measurement(spec, Strategy::kFrioConcatenated, xi, {});
}

Measurement build_measurement(const DetectorSpec& spec, Strategy strategy,
                              double xi) {
  return detail::build_measurement(spec, strategy, xi, {});
}

namespace detail {

Measurement build_measurement(const DetectorSpec& spec, Strategy strategy,
                              double xi, const BuildFaults& faults) {
  if (strategy == Strategy::kMinimumError) {
    if (!faults.flip_g_sign) return build_me_measurement(spec);
    // ME is FRIO at xi = 0; route through it so the fault applies.
    Measurement m = build_measurement(spec, Strategy::kFrioStandard, 0.0, faults);
    m.strategy = Strategy::kMinimumError;
    m.elements.pop_back();
    return m;
  }

  const SeparationParams sep = separation_params(spec, xi);
  const int big_n = spec.num_paths();
  const CMatrix phi = success_kets(spec, sep, faults);
  const CMatrix phi_f = failure_kets(spec, sep);

  Measurement m{strategy, xi, spec.support(), {}};
  for (int j = 0; j < big_n; ++j) {
    m.elements.push_back(rank_one(conclusive(j), phi.col(j)));
  }

  if (strategy == Strategy::kFrioStandard) {
    // Pi^f = (n/N) sum_{i,j} <u_i|u_j> |phi^f_i><phi^f_j| = (n/N) F G F^dagger
    const CMatrix u = uniform_kets(spec.support());
    const CMatrix gram = u.adjoint() * u;
    const double weight = static_cast<double>(spec.dimension()) / big_n;
    CMatrix inconclusive = weight * phi_f * gram * phi_f.adjoint();
    m.elements.push_back(
        {{OutcomeLabel::Kind::kInconclusive, 0}, std::move(inconclusive)});
  } else {
    for (int j = 0; j < big_n; ++j) {
      m.elements.push_back(rank_one(failure_conclusive(j), phi_f.col(j)));
    }
  }
  return m;
}

}  // namespace detail

std::vector<double> conditional_conclusive(const DetectorSpec& spec, double xi) {
  const SeparationParams sep = separation_params(spec, xi);
  return fourier_posterior(spec, sep.g);
}

std::optional<std::vector<double>> conditional_failure(const DetectorSpec& spec) {
  // h does not depend on xi; any level with a nondegenerate branch will do.
  const SeparationParams sep = separation_params(spec, 1.0);
  if (!sep.h) return std::nullopt;
  return fourier_posterior(spec, *sep.h);
}

const OutcomeRow* OutcomeTable::find(const OutcomeLabel& label) const {
  const auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const OutcomeRow& r) { return r.label == label; });
  return it == rows.end() ? nullptr : &*it;
}

OutcomeTable oracle_outcome_table(const SymmetricSet& set, const Measurement& m) {
  const int big_n = set.num_paths();
  if (m.num_paths() != big_n) {
    throw ValidationError("oracle_outcome_table: measurement and states differ in N");
  }
  const CMatrix& states = set.states();
  const CMatrix rho = states * states.adjoint() / static_cast<double>(big_n);

  OutcomeTable table;
  table.rows.reserve(m.elements.size());
  for (const auto& element : m.elements) {
    if (element.matrix.rows() != big_n || element.matrix.cols() != big_n) {
      throw ValidationError("oracle_outcome_table: element has wrong dimensions");
    }
    OutcomeRow row;
    row.label = element.label;
    row.probability = (element.matrix * rho).trace().real();
    if (row.probability >= kNegligibleOutcomeProbability) {
      std::vector<double> cond(static_cast<std::size_t>(big_n));
      for (int l = 0; l < big_n; ++l) {
        const Complex amp = states.col(l).dot(element.matrix * states.col(l));
        cond[static_cast<std::size_t>(l)] =
            amp.real() / (big_n * row.probability);
      }
      row.conditional = std::move(cond);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

PovmCheck check_povm(const Measurement& m) {
  const int big_n = m.num_paths();
  CMatrix projector = CMatrix::Zero(big_n, big_n);
  for (int k : m.support.indices()) projector(k, k) = 1.0;

  PovmCheck check;
  check.min_eigenvalue = std::numeric_limits<double>::infinity();
  CMatrix total = CMatrix::Zero(big_n, big_n);
  for (const auto& element : m.elements) {
    total += element.matrix;
    check.hermiticity_residual =
        std::max(check.hermiticity_residual,
                 (element.matrix - element.matrix.adjoint()).cwiseAbs().maxCoeff());
    const CMatrix hermitian = 0.5 * (element.matrix + element.matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    check.min_eigenvalue = std::min(check.min_eigenvalue, solver.eigenvalues().minCoeff());
  }
  check.completeness_residual = (total - projector).cwiseAbs().maxCoeff();
  return check;
}

}  // namespace duality_lab
