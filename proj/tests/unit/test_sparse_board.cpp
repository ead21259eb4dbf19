#include <doctest.h>

#include "chessbound/oracles.hpp"
#include "chessbound/sparse_board.hpp"

using namespace chessbound;

TEST_CASE("published table spot values") {
  const FTable& f = f_table();
  CHECK(f(2, 0, 0) == 4 * 14 + 12 * 13);
  CHECK(f(1, 2, 2) == 1130721152);
  CHECK(f(6, 2, 2) == 364560);
  CHECK(f(3, 0, 0) == 0);
  CHECK(f(0, 0, 0) == 1952);
  CHECK(f(1, 0, 0) == 1448);
  CHECK(f(0, 2, 2) == 498806704);
  CHECK(f(4, 1, 1) == 38584);
  CHECK(f(5, 2, 2) == 9324672);
  CHECK_THROWS_AS(f(7, 0, 0), ContractViolation);
}

TEST_CASE("worked derivation of f_1(2,2)") {
  const ExactCount v = ExactCount(1448) * 24 * 23 * 23 * 22 + ExactCount(988) * 4 * 8 * 23 * 23 * 22 +
                       ExactCount(964) * (2 * 8 * 24 * 23 * 22 + 2 * 8 * 24 * 22 * 21);
  CHECK(v == f_table()(1, 2, 2));
}

TEST_CASE("published table symmetry and zero pattern") {
  const FTable& f = f_table();
  for (int k = 0; k <= 6; ++k)
    for (int bw = 0; bw < 3; ++bw)
      for (int bb = 0; bb < 3; ++bb) {
        CHECK(f(k, bw, bb) == f(k, bb, bw));
        CHECK((f(k, bw, bb) == 0) == (k > 2 + bw + bb));
      }
  ExactCount kings = 0;
  for (int k = 0; k <= 6; ++k) kings += f(k, 0, 0);
  CHECK(kings == 3612);
}

TEST_CASE("brute force reproduces the published table") {
  CHECK(f_table_bruteforce(1) == f_table());
  CHECK(f_table_bruteforce(3) == f_table());
}

TEST_CASE("rows sum to the count that ignores the back ranks") {
  CHECK(oracles::non_adjacent_king_pairs() == 3612);
  const auto sums = oracles::f_table_row_sums();
  for (int bw = 0; bw < 3; ++bw)
    for (int bb = 0; bb < 3; ++bb) {
      ExactCount s = 0;
      for (int k = 0; k <= 6; ++k) s += f_table()(k, bw, bb);
      CHECK(s == sums[bw][bb]);
    }
}

TEST_CASE("sparse bound") {
  CHECK(sparse_bound(2) == 3612);
  // Three men: kings plus one extra man.
  //  bishop: sum_k f_k(1,0)+f_k(0,1); other piece (Q,R,N per side: 6 choices) on 62 squares;
  //  pawn: f_k(0,0) * (48 - 2 + k) per side.
  ExactCount expected = 0;
  for (int k = 0; k <= 6; ++k) {
    expected += f_table()(k, 1, 0) + f_table()(k, 0, 1);
    expected += f_table()(k, 0, 0) * 6 * 62;
    expected += f_table()(k, 0, 0) * 2 * (48 - 2 + k);
  }
  CHECK(sparse_bound(3) == expected);
  CHECK_THROWS_AS(sparse_bound(1), ContractViolation);
  CHECK_THROWS_AS(sparse_bound(25), ContractViolation);
}
