#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <vector>

#include "chessbound/capture_graph.hpp"
#include "chessbound/core_types.hpp"

namespace chessbound {

/// Colour and nature of the captured man plus the nature of the capturer.
/// The capturer is always of the opposite colour.
struct CaptureEvent {
  Color captured_color = Color::white;
  Nature captured_nature = Nature::piece;
  Nature capturer_nature = Nature::piece;

  Color capturer_color() const noexcept { return opposite(captured_color); }
  constexpr bool operator==(const CaptureEvent&) const = default;
};

/// The class shared by every 32-man diagram: each file holds a black pawn
/// above a white pawn.
PawnClass start_class();

/// Product over files of C(6, k) where k is the file's pawn count.
ExactCount class_position_count(const PawnClass& c);

/// All distinct classes reachable from `c` by one capture of kind `e`,
/// sorted by encoding. Empty when no such capture exists.
std::vector<PawnClass> apply_capture(const PawnClass& c, const CaptureEvent& e);

/// Union of apply_capture over both capturer natures. The pawn-capturer
/// branch is taken only if the capturing side keeps a pawn in edge.to.
std::vector<PawnClass> edge_classes(const PawnClass& c, const GraphEdge& edge);

/// Deduplicated classes of one quadruplet, kept as sorted keys.
struct ClassSet {
  Quadruplet quadruplet;
  std::vector<ClassKey> keys;

  std::size_t count() const noexcept { return keys.size(); }
  PawnClass at(std::size_t i) const { return unpack(keys.at(i)); }
};

struct ClassSummary {
  Quadruplet quadruplet;
  std::uint64_t classes = 0;
  ExactCount pawn_bound;
  /// Wall time spent building the class set; zero when loaded from cache.
  double build_seconds = 0.0;
};

struct EngineOptions {
  std::filesystem::path cache_dir = "class-cache";
  unsigned workers = 1;
};

/// Computes class sets for quadruplets with at least 25 men by descending the
/// capture graph from the root. Results for colour-canonical quadruplets are
/// persisted as one class file each; the mirrored quadruplet is served by the
/// colour swap.
class ClassEngine {
 public:
  static constexpr int kLowestMen = 25;

  explicit ClassEngine(EngineOptions options);

  const EngineOptions& options() const noexcept { return options_; }

  ClassSet quadruplet_classes(const Quadruplet& q);

  /// n_P: upper bound on pawn placements for q.
  ExactCount pawn_bound(const Quadruplet& q);

  ClassSummary summary(const Quadruplet& q);

  /// Builds every layer from 32 men down to `men`, running the quadruplets of
  /// one layer on the configured number of workers.
  void build_layers_down_to(int men);

  std::filesystem::path cache_path(const Quadruplet& canonical) const;

 private:
  const ClassSummary& ensure(const Quadruplet& canonical);
  ClassSummary load_or_build(const Quadruplet& canonical);
  ClassSummary build(const Quadruplet& canonical);
  ClassSummary summarize_file(const Quadruplet& canonical);
  void check_scope(const Quadruplet& q) const;

  EngineOptions options_;
  std::mutex mutex_;
  std::map<Quadruplet, ClassSummary> summaries_;
};

}  // namespace chessbound
