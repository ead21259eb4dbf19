#include "chessbound/piece_placement.hpp"

#include "chessbound/pawn_classes.hpp"

namespace chessbound {

std::vector<PieceMultiset> piece_multisets(int pieces) {
  if (pieces < 1 || pieces > 8) throw ContractViolation("piece count must lie in [1, 8]");
  std::vector<PieceMultiset> out;
  for (int q = 1; q >= 0; --q)
    for (int r = 2; r >= 0; --r)
      for (int b = 2; b >= 0; --b)
        for (int n = 2; n >= 0; --n)
          if (1 + q + r + b + n == pieces) out.push_back({q, r, b, n});
  return out;
}

ExactCount bishop_pair_bound(int free_squares) {
  if (free_squares < 0) throw ContractViolation("negative square count");
  const ExactCount n = free_squares;
  return n * n / 4;
}

ExactCount placement_count(const PieceMultiset& white, const PieceMultiset& black,
                           int free_squares) {
  if (!white.valid() || !black.valid()) throw ContractViolation("invalid piece multiset");
  if (free_squares < 0) throw ContractViolation("negative square count");
  if (white.pieces() + black.pieces() > free_squares) return 0;

  ExactCount total = 1;
  int free = free_squares;
  for (const auto* side : {&white, &black})
    if (side->bishops == 2) {
      total *= bishop_pair_bound(free);
      free -= 2;
    }
  for (const auto* side : {&white, &black})
    if (side->bishops == 1) {
      total *= free;
      free -= 1;
    }
  for (const auto* side : {&white, &black})
    for (int group : {1, side->queens, side->rooks, side->knights}) {
      total *= binomial(static_cast<unsigned>(free), static_cast<unsigned>(group));
      free -= group;
    }
  return total;
}

ExactCount piece_bound(const Quadruplet& q) {
  require_valid(q);
  const int free = 64 - q.white_pawns - q.black_pawns;
  ExactCount total = 0;
  for (const auto& w : piece_multisets(q.white_pieces))
    for (const auto& b : piece_multisets(q.black_pieces)) total += placement_count(w, b, free);
  return total;
}

ExactCount diagram_bound(ClassEngine& engine, const Quadruplet& q) {
  return engine.pawn_bound(q) * piece_bound(q);
}

}  // namespace chessbound
