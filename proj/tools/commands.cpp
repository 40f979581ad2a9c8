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

#include "commands.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "duality_lab/discrimination.hpp"
#include "duality_lab/duality.hpp"
#include "duality_lab/ensemble.hpp"
#include "duality_lab/error.hpp"
#include "duality_lab/saturation.hpp"
#include "duality_lab/serialization.hpp"
#include "duality_lab/verify.hpp"

namespace duality_lab::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedExample {
  const char* name;
  std::array<int, 2> support;
};

constexpr std::array<NamedExample, 3> kExamples{{
    {"six-path-equally-spaced", {0, 3}},
    {"six-path-adjacent", {0, 1}},
    {"six-path-nonadjacent", {0, 2}},
}};

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string short_number(double v) {
  if (std::abs(v) < 1e-15) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  return file;
}

void finish(std::ofstream& file, const std::string& path) {
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ValidationError("expected a comma-separated integer list, got '" + text + "'");
    }
    if (pos != item.size()) {
      throw ValidationError("expected a comma-separated integer list, got '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

// --- scan -----------------------------------------------------------------

struct ScanFlags {
  int num_paths = 0;
  std::string dimension = "all";
  std::size_t samples = 1000;
  std::string strategy = "me";
  std::vector<double> xi{0.0};
  std::uint64_t seed = 0;
  std::string out_path;
  std::string manifest_path;
  std::size_t bins = 200;
  std::optional<int> grid;
  bool uniform = false;
};

void add_scan(CLI::App& app, ScanFlags& f) {
  auto* cmd = app.add_subcommand("scan", "Random or grid (K, C) scatter dataset");
  cmd->add_option("--N", f.num_paths, "Number of paths")->required();
  cmd->add_option("--n", f.dimension, "Detector dimension or 'all'");
  cmd->add_option("--samples", f.samples, "Random specs to draw");
  cmd->add_option("--strategy", f.strategy, "me, frio or conc")
      ->check(CLI::IsMember({"me", "frio", "conc"}));
  cmd->add_option("--xi", f.xi, "Comma-separated separation levels")->delimiter(',');
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--out", f.out_path, "CSV output path (stdout when omitted)");
  cmd->add_option("--manifest", f.manifest_path, "Manifest path (default <out>.json)");
  cmd->add_option("--bins", f.bins, "Envelope bins (0 disables)");
  cmd->add_option("--grid", f.grid, "Deterministic a_min^2 grid steps (N = 2 only)");
  cmd->add_flag("--uniform", f.uniform, "Append every uniform detector spec");
}

int run_scan(const ScanFlags& f, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  config.num_paths = f.num_paths;
  if (f.dimension != "all") {
    const auto v = parse_int_list(f.dimension);
    if (v.size() != 1) throw ValidationError("--n takes one integer or 'all'");
    config.dimension = v.front();
  }
  config.samples = f.samples;
  config.seed = f.seed;
  config.envelope_bins = f.bins;
  config.grid_steps = f.grid;
  config.include_uniform_enumeration = f.uniform;
  const Strategy strategy = parse_strategy(f.strategy);
  config.strategies.clear();
  if (strategy == Strategy::kMinimumError) {
    config.strategies.push_back({strategy, 0.0});
  } else {
    if (f.xi.empty()) throw ValidationError("--xi needs at least one value");
    for (double xi : f.xi) config.strategies.push_back({strategy, xi});
  }
  config.validate();

  const ScatterDataset data = run_sweep(config);
  if (f.out_path.empty()) {
    write_duality_csv(out, data.points);
  } else {
    auto csv = open_output(f.out_path);
    write_duality_csv(csv, data.points);
    finish(csv, f.out_path);
  }
  const std::string manifest_path =
      !f.manifest_path.empty() ? f.manifest_path
                               : (f.out_path.empty() ? std::string() : f.out_path + ".json");
  if (!manifest_path.empty()) {
    auto manifest = open_output(manifest_path);
    manifest << manifest_to_json(data) << '\n';
    finish(manifest, manifest_path);
  }
  err << "scan: " << data.points.size() << " points in " << data.wall_time_seconds << " s\n";
  return kExitOk;
}

// --- enumerate-uniform ----------------------------------------------------

struct EnumerateFlags {
  int num_paths = 0;
  std::optional<int> dimension;
  std::string strategy = "me";
  double xi = 0.0;
  std::string out_path;
};

void add_enumerate(CLI::App& app, EnumerateFlags& f) {
  auto* cmd = app.add_subcommand("enumerate-uniform",
                                 "(K, C) for every uniform detector spec");
  cmd->add_option("--N", f.num_paths, "Number of paths")->required();
  cmd->add_option("--n", f.dimension, "Only this dimension (default 1..N)");
  cmd->add_option("--strategy", f.strategy, "me, frio or conc")
      ->check(CLI::IsMember({"me", "frio", "conc"}));
  cmd->add_option("--xi", f.xi, "Separation level");
  cmd->add_option("--out", f.out_path, "CSV output path (stdout when omitted)");
}

int run_enumerate(const EnumerateFlags& f, std::ostream& out) {
  const Strategy strategy = parse_strategy(f.strategy);
  std::vector<DualityPoint> points;
  const int lo = f.dimension.value_or(1);
  const int hi = f.dimension.value_or(f.num_paths);
  for (int n = lo; n <= hi; ++n) {
    for (const auto& spec : enumerate_uniform_specs(f.num_paths, n)) {
      points.push_back(evaluate_point(spec, strategy, f.xi));
    }
  }
  if (f.out_path.empty()) {
    write_duality_csv(out, points);
  } else {
    auto csv = open_output(f.out_path);
    write_duality_csv(csv, points);
    finish(csv, f.out_path);
  }
  return kExitOk;
}

// --- saturation -----------------------------------------------------------

struct SaturationFlags {
  int num_paths = 0;
  std::string out_path;
};

void add_saturation(CLI::App& app, SaturationFlags& f) {
  auto* cmd = app.add_subcommand("saturation",
                                 "Saturation report over all uniform detector specs");
  cmd->add_option("--N", f.num_paths, "Number of paths (<= 24)")->required();
  cmd->add_option("--out", f.out_path, "CSV output path (stdout when omitted)");
}

int run_saturation(const SaturationFlags& f, std::ostream& out) {
  if (f.num_paths > kMaxScanPaths) {
    throw BudgetError("saturation: N = " + std::to_string(f.num_paths) +
                      " exceeds the enumeration budget (N <= 24)");
  }
  std::optional<std::ofstream> file;
  if (!f.out_path.empty()) file = open_output(f.out_path);
  std::ostream& csv = file ? static_cast<std::ostream&>(*file) : out;
  csv << kSaturationCsvHeader << '\n';
  std::vector<std::string> nontrivial;
  saturation_scan_each(f.num_paths, [&](const SaturationReport& r) {
    csv << saturation_csv_row(r) << '\n';
    if (r.saturating && r.support_size > 1 && r.support_size < f.num_paths) {
      std::string s = "{";
      for (std::size_t i = 0; i < r.support.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(r.support[i]);
      }
      nontrivial.push_back(s + "}");
    }
  });
  if (file) finish(*file, f.out_path);

  const auto dims = saturating_dimensions(f.num_paths);
  std::string list;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) list += ',';
    list += std::to_string(dims[i]);
  }
  out << "N=" << f.num_paths << " nontrivial saturating dimensions: " << list
      << " (eta-2 = " << dims.size() << ")\n";
  out << "nontrivial saturating supports:";
  for (const auto& s : nontrivial) out << ' ' << s;
  out << '\n';
  return kExitOk;
}

// --- example --------------------------------------------------------------

int run_example(const std::string& name, std::ostream& out, std::ostream& err) {
  const auto it = std::find_if(kExamples.begin(), kExamples.end(),
                               [&](const NamedExample& e) { return name == e.name; });
  if (it == kExamples.end()) {
    err << "unknown example '" << name << "'; valid names:";
    for (const auto& e : kExamples) err << ' ' << e.name;
    err << '\n';
    return kExitUsage;
  }
  const DetectorSpec spec = DetectorSpec::uniform(
      Support(6, {it->support[0], it->support[1]}));
  const DualityPoint p = evaluate_point(spec, Strategy::kMinimumError, 0.0);
  const auto dist = conditional_conclusive(spec, 0.0);
  out << "example " << it->name << '\n';
  out << "N=" << p.num_paths << " n=" << p.dimension << " support=" << p.support.to_string()
      << '\n';
  out << "C=" << fixed3(p.coherence) << '\n';
  out << "K_me=" << fixed3(p.knowledge) << '\n';
  out << "sum=" << fixed3(p.duality_sum) << '\n';
  out << "distribution=";
  for (std::size_t i = 0; i < dist.size(); ++i) out << (i ? "," : "") << short_number(dist[i]);
  out << '\n';
  return kExitOk;
}

// --- povm -----------------------------------------------------------------

struct PovmFlags {
  int num_paths = 0;
  std::string support;
  std::string coeffs_sq;
  std::string spec_path;
  std::string strategy = "me";
  double xi = 0.0;
  std::string out_path;
};

void add_povm(CLI::App& app, PovmFlags& f) {
  auto* cmd = app.add_subcommand("povm", "Dump a measurement as JSON");
  cmd->add_option("--N", f.num_paths, "Number of paths");
  cmd->add_option("--support", f.support, "Comma-separated support indices");
  cmd->add_option("--coeffs-sq", f.coeffs_sq,
                  "Comma-separated probabilities a_k^2 (uniform when omitted)");
  cmd->add_option("--spec", f.spec_path, "Detector spec JSON file");
  cmd->add_option("--strategy", f.strategy, "me, frio or conc")
      ->check(CLI::IsMember({"me", "frio", "conc"}));
  cmd->add_option("--xi", f.xi, "Separation level");
  cmd->add_option("--out", f.out_path, "JSON output path (stdout when omitted)");
}

DetectorSpec spec_from_flags(const PovmFlags& f) {
  if (!f.spec_path.empty()) {
    std::ifstream in(f.spec_path);
    if (!in) throw IoError("cannot read '" + f.spec_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return spec_from_json(ss.str());
  }
  if (f.num_paths == 0 || f.support.empty()) {
    throw ValidationError("povm: give --spec, or --N with --support");
  }
  Support support(f.num_paths, parse_int_list(f.support));
  if (f.coeffs_sq.empty()) return DetectorSpec::uniform(std::move(support));
  std::ostringstream json;
  json << R"({"N":)" << f.num_paths << R"(,"support":[)" << f.support
       << R"(],"coeffs_sq":[)" << f.coeffs_sq << "]}";
  return spec_from_json(json.str());
}

int run_povm(const PovmFlags& f, std::ostream& out) {
  const DetectorSpec spec = spec_from_flags(f);
  const Measurement m = build_measurement(spec, parse_strategy(f.strategy), f.xi);
  const std::string text = measurement_to_json(m);
  if (f.out_path.empty()) {
    out << text << '\n';
  } else {
    auto file = open_output(f.out_path);
    file << text << '\n';
    finish(file, f.out_path);
  }
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyFlags {
  long long samples = 1000;
  std::uint64_t seed = 1;
  int min_paths = 2;
  int max_paths = 8;
  bool inject_fault = false;
};

void add_verify(CLI::App& app, VerifyFlags& f) {
  auto* cmd = app.add_subcommand("verify", "Run the invariant suites on random specs");
  cmd->add_option("--samples", f.samples, "Random specs to test");
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--N-min", f.min_paths, "Smallest N");
  cmd->add_option("--N-max", f.max_paths, "Largest N");
  cmd->add_flag("--inject-fault", f.inject_fault, "Corrupt g_k (self-test of the suites)")
      ->group("");
}

int run_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  if (f.samples < 1) throw ValidationError("verify: --samples must be >= 1");
  VerifyOptions options;
  options.samples = static_cast<std::size_t>(f.samples);
  options.seed = f.seed;
  options.min_paths = f.min_paths;
  options.max_paths = f.max_paths;
  options.faults.flip_g_sign = f.inject_fault;
  const VerifyReport report = run_verification(options);
  print_report(report, out);
  if (!report.ok()) {
    err << "verify: property violations detected\n";
    return kExitPropertyFailure;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wave-particle duality toolkit for symmetric which-path detectors",
               "duality-lab"};
  app.require_subcommand(1);

  ScanFlags scan;
  EnumerateFlags enumerate;
  SaturationFlags saturation;
  PovmFlags povm;
  VerifyFlags verify;
  std::string example_name;

  add_scan(app, scan);
  add_enumerate(app, enumerate);
  add_saturation(app, saturation);
  add_povm(app, povm);
  add_verify(app, verify);
  auto* example = app.add_subcommand("example", "Print a named worked example");
  example->add_option("name", example_name, "Example name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "duality-lab: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("scan")) return run_scan(scan, out, err);
    if (app.got_subcommand("enumerate-uniform")) return run_enumerate(enumerate, out);
    if (app.got_subcommand("saturation")) return run_saturation(saturation, out);
    if (app.got_subcommand("example")) return run_example(example_name, out, err);
    if (app.got_subcommand("povm")) return run_povm(povm, out);
    if (app.got_subcommand("verify")) return run_verify(verify, out, err);
  } catch (const IoError& e) {
    err << "duality-lab: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "duality-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "duality-lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "duality-lab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace duality_lab::cli
