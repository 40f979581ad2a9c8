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

#include "duality_lab/serialization.hpp"

#include <charconv>
#include <vector>

#include "json.hpp"

#include "duality_lab/error.hpp"

namespace duality_lab {

using nlohmann::json;

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string spec_to_json(const DetectorSpec& spec) {
  const auto indices = spec.support().indices();
  json j;
  j["N"] = spec.num_paths();
  j["support"] = std::vector<int>(indices.begin(), indices.end());
  j["coeffs_sq"] = spec.probabilities();
  return j.dump();
}

DetectorSpec spec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("detector spec JSON: ") + e.what());
  }
  try {
    const int num_paths = j.at("N").get<int>();
    auto support = j.at("support").get<std::vector<int>>();
    const auto probs = j.at("coeffs_sq").get<std::vector<double>>();
    if (support.size() != probs.size()) {
      throw ValidationError("detector spec JSON: support and coeffs_sq differ in length");
    }
    // Pair indices with their probabilities before Support sorts them.
    std::vector<std::pair<int, double>> pairs;
    for (std::size_t i = 0; i < support.size(); ++i) pairs.emplace_back(support[i], probs[i]);
    std::sort(pairs.begin(), pairs.end());
    std::vector<double> sorted_probs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      support[i] = pairs[i].first;
      sorted_probs.push_back(pairs[i].second);
    }
    return DetectorSpec::from_probabilities(Support(num_paths, std::move(support)),
                                            sorted_probs);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("detector spec JSON: ") + e.what());
  }
}

std::string measurement_to_json(const Measurement& m) {
  json out;
  out["strategy"] = std::string(to_string(m.strategy));
  out["xi"] = m.xi;
  out["N"] = m.num_paths();
  const auto indices = m.support.indices();
  out["support"] = std::vector<int>(indices.begin(), indices.end());
  json elements = json::array();
  for (const auto& e : m.elements) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < e.matrix.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < e.matrix.cols(); ++c) {
        row.push_back({e.matrix(r, c).real(), e.matrix(r, c).imag()});
      }
      rows.push_back(std::move(row));
    }
    elements.push_back({{"label", e.label.to_string()}, {"matrix", std::move(rows)}});
  }
  out["elements"] = std::move(elements);
  return out.dump();
}

std::string duality_csv_row(const DualityPoint& p) {
  std::string row;
  row += std::to_string(p.num_paths);
  row += ',';
  row += std::to_string(p.dimension);
  row += ',';
  row += to_string(p.strategy);
  row += ',';
  row += format_double(p.xi);
  row += ',';
  row += format_double(p.knowledge);
  row += ',';
  row += format_double(p.coherence);
  row += ',';
  row += format_double(p.duality_sum);
  row += ',';
  row += p.support.to_string();
  return row;
}

void write_duality_csv(std::ostream& out, std::span<const DualityPoint> points) {
  out << kDualityCsvHeader << '\n';
  for (const auto& p : points) out << duality_csv_row(p) << '\n';
}

std::string saturation_csv_row(const SaturationReport& r) {
  std::string row;
  row += std::to_string(r.support.num_paths());
  row += ',';
  row += std::to_string(r.support_size);
  row += ',';
  row += r.support.to_string();
  row += ',';
  row += std::to_string(r.lambda_support_size);
  row += ',';
  row += format_double(r.entropy_sum);
  row += ',';
  row += r.saturating ? "true" : "false";
  row += ',';
  row += to_string(r.structure);
  return row;
}

std::string manifest_to_json(const ScatterDataset& d) {
  const SweepConfig& c = d.config;
  json config;
  config["N"] = c.num_paths;
  config["n"] = c.dimension ? json(*c.dimension) : json("all");
  config["samples"] = c.samples;
  json strategies = json::array();
  for (const auto& s : c.strategies) {
    strategies.push_back({{"strategy", std::string(to_string(s.strategy))}, {"xi", s.xi}});
  }
  config["strategies"] = std::move(strategies);
  config["seed"] = c.seed;
  config["include_uniform_enumeration"] = c.include_uniform_enumeration;
  config["grid_steps"] = c.grid_steps ? json(*c.grid_steps) : json(nullptr);
  config["bins"] = c.envelope_bins;

  json out;
  out["config"] = std::move(config);
  out["wall_time"] = d.wall_time_seconds;
  out["point_count"] = d.points.size();
  json envelope = json::array();
  if (d.envelope) {
    for (const auto& b : *d.envelope) {
      envelope.push_back({{"k_center", b.k_center},
                          {"c_min", b.c_min},
                          {"c_max", b.c_max},
                          {"count", b.count}});
    }
  }
  out["envelope"] = std::move(envelope);
  return out.dump(2);
}

}  // namespace duality_lab
