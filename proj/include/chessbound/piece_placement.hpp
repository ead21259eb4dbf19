#pragma once

#include <vector>

#include "chessbound/core_types.hpp"

namespace chessbound {

class ClassEngine;

/// Non-king, non-pawn material of one side. The king is implied.
struct PieceMultiset {
  int queens = 0;
  int rooks = 0;
  int bishops = 0;
  int knights = 0;

  int pieces() const noexcept { return 1 + queens + rooks + bishops + knights; }
  bool valid() const noexcept {
    return queens >= 0 && queens <= 1 && rooks >= 0 && rooks <= 2 && bishops >= 0 &&
           bishops <= 2 && knights >= 0 && knights <= 2;
  }
  constexpr auto operator<=>(const PieceMultiset&) const = default;
};

/// Every multiset with `pieces` pieces including the king, ordered by
/// (queens, rooks, bishops, knights) descending.
std::vector<PieceMultiset> piece_multisets(int pieces);

/// floor(n^2 / 4): one light-squared and one dark-squared bishop on n squares.
ExactCount bishop_pair_bound(int free_squares);

/// Upper bound on placements of both sides' pieces on `free_squares` squares.
/// Bishop pairs go first (n, then n - 2), single bishops next on any free
/// square, then kings, queens, rooks and knights as unordered groups.
ExactCount placement_count(const PieceMultiset& white, const PieceMultiset& black,
                           int free_squares);

/// m_P: sum of placement_count over all multiset pairs of q, with the squares
/// not taken by pawns as the free set.
ExactCount piece_bound(const Quadruplet& q);

/// n_P * m_P.
ExactCount diagram_bound(ClassEngine& engine, const Quadruplet& q);

}  // namespace chessbound
