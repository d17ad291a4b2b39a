#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "infref/io.hpp"
#include "infref/model.hpp"

namespace infref {

/// Portable seeded generator: std::mt19937_64 (sequence fixed by the
/// standard) with explicit bit-level mappings to doubles and indices.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform index in [0, n); n must be positive.
  std::size_t below(std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
  }

 private:
  std::mt19937_64 engine_;
};

struct OneIdSpec {
  std::size_t n = 8;
  double b = 0.7794;
  std::uint64_t seed = 0;
};

/// Random single-decision diagram: n independent binary chance nodes with
/// priors (x, 1 - x), x ~ U[0,1], all observed by one binary decision. The
/// value tree walks the chance nodes in order, keeping each as a split with
/// probability b at every tree position, and always splits on the decision
/// last; leaves are U[0,1]. Draw order: priors, retention flags (depth-first),
/// leaf values (depth-first).
InfluenceDiagram generate_1id(const OneIdSpec& spec);

enum Direction : std::size_t { north = 0, east = 1, south = 2, west = 3 };
inline constexpr std::array<const char*, 4> direction_names{"N", "E", "S", "W"};

/// Rectangular maze; walls[cell][dir] is true when movement in `dir` is blocked.
struct MazeGrid {
  std::string name;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::array<bool, 4>> walls;
  std::size_t goal = 0;
  /// Cells marked as start cells (empty: every cell).
  std::vector<std::size_t> starts;

  std::size_t cells() const { return rows * cols; }
  std::size_t neighbor(std::size_t cell, std::size_t dir) const;
};

/// Parses the text grid format (see docs in README): '+' corners, '-' and '|'
/// walls, cells at odd coordinates holding ' ', '.', 'G' (goal) or 'S'
/// (start). Lines starting with '#' are comments. Boundary is always walled.
MazeGrid parse_maze(std::string_view text, std::string name = {});
MazeGrid load_maze(const std::filesystem::path& path);
std::string format_maze(const MazeGrid& grid);

struct MazeSpec {
  MazeGrid grid;
  std::size_t stages = 10;
  double actuator_noise = 0.0;
  double sensor_noise = 0.0;
  /// Distribution over cells; empty means uniform over the grid's start cells.
  std::vector<double> start;
  std::uint64_t seed = 0;
};

/// Multistage navigation diagram: hidden position per stage, four noisy wall
/// sensors per stage, one move decision per stage observing all earlier
/// sensors and moves; value 1 iff the final position is the goal.
InfluenceDiagram generate_maze(const MazeSpec& spec);

/// log2 of the number of information states of `decision` (product of its
/// information-set arities).
double information_states_log2(const InfluenceDiagram& diagram, VarIndex decision);

Json one_id_spec_to_json(const OneIdSpec& spec);
Json maze_spec_to_json(const MazeSpec& spec);
MazeSpec maze_spec_from_json(const Json& doc);

struct CorpusEntry {
  std::string id;
  std::uint64_t seed = 0;
  Json spec;
  InfluenceDiagram diagram;
};

struct Corpus {
  std::string family;
  std::uint64_t base_seed = 0;
  std::vector<CorpusEntry> entries;

  /// Manifest listing spec, seed and relative output path per instance.
  Json manifest() const;
  /// Writes `<id>.id.json` per instance plus `manifest.json`.
  void write(const std::filesystem::path& dir) const;
};

struct MazeTemplate {
  std::vector<MazeGrid> grids;
  std::size_t stages = 5;
  std::vector<double> actuator_levels{0.0, 0.05, 0.1, 0.2};
  std::vector<double> sensor_levels{0.0, 0.05, 0.1, 0.2};
};

/// Instances use seeds base, base+1, ...
Corpus generate_corpus_1id(std::size_t n, double b, std::size_t count, std::uint64_t base_seed);
/// Instance i draws grid, actuator noise and sensor noise from Rng(base + i).
Corpus generate_corpus_maze(const MazeTemplate& tmpl, std::size_t count, std::uint64_t base_seed);
/// One instance per explicit spec.
Corpus corpus_from_maze_specs(const std::vector<MazeSpec>& specs);

}  // namespace infref
