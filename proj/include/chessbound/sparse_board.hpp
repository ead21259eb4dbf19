#pragma once

#include <array>

#include "chessbound/core_types.hpp"

namespace chessbound {

/// f_k(b_w, b_b): placements of two non-adjacent kings, b_w white and b_b
/// black bishops with exactly k of these men on ranks 1 and 8.
class FTable {
 public:
  static constexpr int kMaxInA = 6;

  const ExactCount& operator()(int k, int white_bishops, int black_bishops) const {
    return values_.at(index(k, white_bishops, black_bishops));
  }
  ExactCount& operator()(int k, int white_bishops, int black_bishops) {
    return values_.at(index(k, white_bishops, black_bishops));
  }

  bool operator==(const FTable&) const = default;

 private:
  static std::size_t index(int k, int bw, int bb) {
    if (k < 0 || k > kMaxInA || bw < 0 || bw > 2 || bb < 0 || bb > 2)
      throw ContractViolation("f-table index out of range");
    return static_cast<std::size_t>(k * 9 + bw * 3 + bb);
  }

  std::array<ExactCount, 63> values_{};
};

/// The published kings-and-bishops table.
const FTable& f_table();

/// Recomputes every entry by enumerating king pairs and bishop squares.
/// Same-side bishop pairs stand on one light and one dark square.
FTable f_table_bruteforce(unsigned workers = 1);

/// Upper bound on diagrams with `men` men (2..24): kings and bishops from
/// the f-table, pawns outside ranks 1 and 8, remaining pieces anywhere free.
ExactCount sparse_bound(int men);

}  // namespace chessbound
