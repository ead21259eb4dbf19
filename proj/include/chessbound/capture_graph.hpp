#pragma once

#include <utility>
#include <vector>

#include "chessbound/core_types.hpp"

namespace chessbound {

/// A single capture: exactly one counter of `from` drops by one to give `to`.
struct GraphEdge {
  Quadruplet from;
  Quadruplet to;
  Color captured_color = Color::white;
  Nature captured_nature = Nature::piece;

  Color capturer_color() const noexcept { return opposite(captured_color); }

  constexpr bool operator==(const GraphEdge&) const = default;
};

/// Every edge ending at q. Empty for the root.
std::vector<GraphEdge> predecessors(const Quadruplet& q);

/// Every edge leaving q (kings are never captured).
std::vector<GraphEdge> successors(const Quadruplet& q);

/// All valid quadruplets with `men` men, in descending lexicographic order.
std::vector<Quadruplet> quadruplets_with_men(int men);

/// The lexicographically smaller of q and its colour swap, and whether the
/// swap was taken.
std::pair<Quadruplet, bool> canonical_symmetry(const Quadruplet& q);

}  // namespace chessbound
