#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "infref/generators.hpp"
#include "infref/metamodel.hpp"
#include "infref/records.hpp"

namespace infref {

namespace fs = std::filesystem;

struct MazeAgent {
  std::string name;
  double actuator_noise = 0.0;
  double sensor_noise = 0.0;
};

/// Corpus section of an experiment config.
///   family "1id":       count, n, b
///   family "maze":      count, stages, grids, actuator_levels, sensor_levels
///                       (instance i draws grid and noises from Rng(seed + i))
///   family "maze-grid": every grid crossed with every agent
struct CorpusConfig {
  std::string family = "1id";
  std::size_t count = 100;
  std::size_t n = 8;
  double b = 0.7794;
  std::size_t stages = 5;
  std::vector<fs::path> grids;
  std::vector<double> actuator_levels{0.0, 0.05, 0.1, 0.2};
  std::vector<double> sensor_levels{0.0, 0.05, 0.1, 0.2};
  std::vector<MazeAgent> agents;
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  fs::path out = "out";
  std::size_t parallelism = 1;
  std::size_t budget = 100;
  std::size_t step = 10;
  int degree = 1;
  std::string cost = "zero";
  /// Compute EV_I* with solve_optimal when refining (null on cap overflow).
  bool solve = true;
  std::size_t solve_cap = std::size_t{1} << 20;
  CorpusConfig corpus;

  /// Reads JSON; relative paths resolve against the file's directory.
  static ExperimentConfig load(const fs::path& path);
  static ExperimentConfig from_json(const Json& doc, const fs::path& base = {});
  /// Throws std::invalid_argument on violated invariants.
  void check() const;

  fs::path corpus_dir() const { return out / "corpus"; }
  fs::path profiles_dir() const { return out / "profiles"; }
  fs::path model_path() const { return out / "model.json"; }
};

/// Diagnostics sink for warnings and progress; defaults to discarding.
using Log = std::function<void(const std::string&)>;

Corpus build_corpus(const ExperimentConfig& config);
Corpus cmd_generate(const ExperimentConfig& config, const fs::path& out);

/// A diagram file, or a corpus directory (manifest order, else sorted
/// *.id.json files).
std::vector<fs::path> resolve_problems(const fs::path& path);

struct RefineSettings {
  std::size_t budget = 100;
  bool solve = true;
  std::size_t solve_cap = std::size_t{1} << 20;
  std::size_t parallelism = 1;
};

/// Writes <id>.profile.csv, <id>.profile.json and <id>.policy.json per problem.
std::vector<RefinementProfile> cmd_refine(const std::vector<fs::path>& problems, const RefineSettings& settings,
                                          const fs::path& out, const Log& log = {});

/// Loads every *.profile.json in `dir` (sorted by file name).
std::vector<RefinementProfile> load_profiles(const fs::path& dir);

/// Fits on row `step` of every profile; all profiles need EV_I*.
MetaModel cmd_fit(const fs::path& profiles, int degree, std::size_t step, const fs::path& out);

/// Writes <id>.predictions.csv (step,ev_i,h,ev_star_hat) for every profile
/// plus a copy of the model as model.json.
void cmd_predict(const MetaModel& model, const fs::path& profiles, const fs::path& out);

struct LabeledModel {
  std::string label;
  MetaModel model;
};

struct ControlSettings {
  std::size_t budget = 100;
  bool clamp = false;
  bool svg = false;
  std::size_t parallelism = 1;
};

/// Runs the controller with the first model; further models only contribute
/// estimate series. Writes <id>.trace.csv, <id>.summary.json,
/// <id>.series.csv and optionally SVG charts.
std::vector<ControllerTrace> cmd_control(const std::vector<fs::path>& problems, const std::vector<LabeledModel>& models,
                                         const CostModel& cost, const ControlSettings& settings, const fs::path& out,
                                         const Log& log = {});

struct DiffStats {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;
};

struct ReportEntry {
  std::string label;
  double final_estimate = 0.0;
  DiffStats vs_current;
  DiffStats vs_best;
};

struct ReportRow {
  std::string id;
  double final_ev_i = 0.0;
  double best_known = 0.0;
  /// "ev_star" or "profiles".
  std::string best_known_source;
  std::vector<ReportEntry> estimates;
};

struct Report {
  std::vector<std::string> models;
  std::vector<ReportRow> rows;
  /// Per model: pooled statistics over every per-step difference.
  std::vector<ReportEntry> aggregate;

  Json to_json() const;
  std::string to_table() const;
};

/// Pools (count, mean, population std) groups exactly.
DiffStats pool(const std::vector<DiffStats>& parts);
DiffStats describe(const std::vector<double>& xs);

Report cmd_report(const fs::path& profiles, const std::vector<fs::path>& predictions, const fs::path& out);

/// Runs fn(i) for i in [0, n) on up to `width` threads; rethrows the first
/// failure (lowest index) after all jobs finish.
void parallel_for(std::size_t n, std::size_t width, const std::function<void(std::size_t)>& fn);

}  // namespace infref
