#pragma once

// Slow, independent counting routines. Nothing in the engine calls these;
// they exist so tests and `chessbound verify` can cross-check it.

#include <array>
#include <random>
#include <vector>

#include "chessbound/core_types.hpp"
#include "chessbound/piece_placement.hpp"

namespace chessbound::oracles {

/// Number of pawn placements realising `c`, found by trying every filling of
/// each file's six pawn ranks (empty / white / black) and keeping those whose
/// top-down reading equals the file's column.
ExactCount verify_class_count_oracle(const PawnClass& c);

/// Placements of the two multisets on a board of `light` light and `dark`
/// dark squares, found by enumerating square assignments. Identical pieces of
/// one colour are unordered; a side's two bishops stand on opposite colours.
std::uint64_t count_placements_bruteforce(const PieceMultiset& white, const PieceMultiset& black,
                                          int light, int dark);

/// Sum over k of f_k(b_w, b_b), i.e. placements of non-adjacent kings and the
/// bishops with no reference to the back ranks, computed from per-colour
/// square counts for each king pair.
std::array<std::array<ExactCount, 3>, 3> f_table_row_sums();

/// Uniformly random file lengths and markers, rejecting classes with more
/// than eight pawns of one colour.
PawnClass random_class(std::mt19937_64& rng);

/// Number of ordered non-adjacent king pairs.
std::uint64_t non_adjacent_king_pairs();

}  // namespace chessbound::oracles
