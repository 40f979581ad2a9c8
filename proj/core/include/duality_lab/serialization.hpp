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

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "duality_lab/discrimination.hpp"
#include "duality_lab/duality.hpp"
#include "duality_lab/ensemble.hpp"
#include "duality_lab/saturation.hpp"
#include "duality_lab/states.hpp"

namespace duality_lab {

/// Shortest round-trip decimal form ('.' separator, locale independent).
std::string format_double(double value);

/// {"N": int, "support": [int], "coeffs_sq": [float]}
std::string spec_to_json(const DetectorSpec& spec);
/// Throws ValidationError on malformed JSON or an invalid spec.
DetectorSpec spec_from_json(std::string_view text);

/// {"strategy", "xi", "elements": [{"label", "matrix": [[[re, im], ...], ...]}]}
/// with matrices row-major.
std::string measurement_to_json(const Measurement& m);

inline constexpr std::string_view kDualityCsvHeader = "N,n,strategy,xi,K,C,sum,support";
std::string duality_csv_row(const DualityPoint& point);
/// Header plus one LF-terminated row per point.
void write_duality_csv(std::ostream& out, std::span<const DualityPoint> points);

inline constexpr std::string_view kSaturationCsvHeader =
    "N,n,support,lambda_support,entropy_sum,saturating,structure";
std::string saturation_csv_row(const SaturationReport& report);

/// {"config": {...}, "wall_time": s, "point_count": n, "envelope": [...]}
std::string manifest_to_json(const ScatterDataset& dataset);

}  // namespace duality_lab
