#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtorus/measurement.hpp"
#include "qtorus/torus_maps.hpp"

namespace qtorus {

// One experiment run: what to compute and where to write it. Serialized
// verbatim (as canonical JSON) into the header of every output file.
struct ExperimentConfig {
  enum class Experiment { entropy, freeness, fstats, verify };

  Experiment experiment = Experiment::entropy;
  MapKind map = MapKind::cat;
  int dim = 64;
  std::string partition = "equal:4";
  int steps = 14;          // entropy: number of measured evolution steps
  int n_max = 24;          // freeness: longest sequence length
  int samples_per_n = 32;  // freeness
  int r_max = 2;           // freeness: r_j drawn from {-r_max..-1, 1..r_max}
  int m_max = 16;          // fstats: powers m = 1..m_max
  std::string variant = "Q";  // fstats: which variant the CSV emphasizes
  Centering centering = Centering::uniform;
  std::string suite = "fast";  // verify: fast | full
  std::uint64_t seed = 12345;
  std::string out_dir;

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  // Compact single-line serialization used in file headers.
  std::string canonical_string() const;
  // Throws ConfigError on invalid combinations, ResourceLimit on ceilings.
  void validate() const;
};

std::string to_string(ExperimentConfig::Experiment e);
ExperimentConfig::Experiment experiment_from_string(const std::string& name);

// What a run produced. Exactly one manifest.json is written per run; it is
// the only output allowed to contain non-reproducible content (duration).
struct RunResult {
  bool ok = true;
  std::vector<std::string> files;  // paths relative to out_dir
  nlohmann::json manifest;
  int exit_code = 0;
};

// Entropy trajectory runs (CSV + gnuplot script + manifest).
RunResult run_entropy(const ExperimentConfig& config);
// Correlation-function sampling and decay fit (CSV + JSON + gnuplot scripts).
RunResult run_freeness(const ExperimentConfig& config);
// F-variable statistics (CSV + manifest).
RunResult run_fstats(const ExperimentConfig& config);
// Cross-module invariant suite at oracle scale (JSON report); ok=false and
// exit_code 2 if any check fails.
RunResult run_verify(const ExperimentConfig& config);

RunResult run(const ExperimentConfig& config);

}  // namespace qtorus
