#include "chessbound/oracles.hpp"

#include <functional>

namespace chessbound::oracles {

namespace {

std::uint64_t file_fillings(const Column& col) {
  std::uint64_t matches = 0;
  // Each of the 6 ranks (7th first) holds 0 empty, 1 white, 2 black.
  for (int code = 0; code < 729; ++code) {
    int rest = code;
    std::vector<int> reading;
    for (int rank = 0; rank < 6; ++rank, rest /= 3) {
      if (rest % 3 == 1) reading.push_back(+1);
      if (rest % 3 == 2) reading.push_back(-1);
    }
    if (static_cast<int>(reading.size()) != col.length) continue;
    bool same = true;
    for (int i = 0; i < col.length && same; ++i) same = reading[i] == col.marker(i);
    if (same) ++matches;
  }
  return matches;
}

struct Slot {
  int group;      // pieces sharing a group are interchangeable
  int colour;     // -1 any, 0 light, 1 dark
};

bool kings_adjacent(int a, int b) {
  const int dr = a / 8 - b / 8, df = a % 8 - b % 8;
  return dr >= -1 && dr <= 1 && df >= -1 && df <= 1;
}

}  // namespace

ExactCount verify_class_count_oracle(const PawnClass& c) {
  ExactCount total = 1;
  for (const auto& col : c.columns()) total *= file_fillings(col);
  return total;
}

std::uint64_t count_placements_bruteforce(const PieceMultiset& white, const PieceMultiset& black,
                                          int light, int dark) {
  std::vector<Slot> slots;
  int group = 0;
  for (const auto* side : {&white, &black}) {
    slots.push_back({group++, -1});  // king
    for (int i = 0; i < side->queens; ++i) slots.push_back({group, -1});
    ++group;
    for (int i = 0; i < side->rooks; ++i) slots.push_back({group, -1});
    ++group;
    for (int i = 0; i < side->knights; ++i) slots.push_back({group, -1});
    ++group;
    if (side->bishops == 2) {
      slots.push_back({group++, 0});
      slots.push_back({group++, 1});
    } else if (side->bishops == 1) {
      slots.push_back({group++, -1});
    }
  }

  const int n = light + dark;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> square(slots.size(), -1);
  std::function<std::uint64_t(std::size_t)> go = [&](std::size_t i) -> std::uint64_t {
    if (i == slots.size()) return 1;
    std::uint64_t count = 0;
    // Identical pieces take increasing squares, so each set is counted once.
    const int first = (i > 0 && slots[i - 1].group == slots[i].group) ? square[i - 1] + 1 : 0;
    for (int sq = first; sq < n; ++sq) {
      if (used[sq]) continue;
      const int colour = sq < light ? 0 : 1;
      if (slots[i].colour >= 0 && slots[i].colour != colour) continue;
      used[sq] = true;
      square[i] = sq;
      count += go(i + 1);
      used[sq] = false;
    }
    return count;
  };
  return go(0);
}

std::array<std::array<ExactCount, 3>, 3> f_table_row_sums() {
  std::array<std::array<ExactCount, 3>, 3> out{};
  for (int wk = 0; wk < 64; ++wk)
    for (int bk = 0; bk < 64; ++bk) {
      if (wk == bk || kings_adjacent(wk, bk)) continue;
      // Light squares left after the kings.
      std::int64_t light = 32, dark = 32;
      for (int k : {wk, bk}) ((k / 8 + k % 8) % 2 ? light : dark) -= 1;

      // Counts for one side's bishops given free (light, dark), with the
      // resulting colour usage, then chained for the second side.
      auto side = [](int b, std::int64_t l, std::int64_t d) {
        struct Outcome { std::int64_t ways, used_light, used_dark; };
        std::vector<Outcome> r;
        if (b == 0) r.push_back({1, 0, 0});
        if (b == 1) {
          r.push_back({l, 1, 0});
          r.push_back({d, 0, 1});
        }
        if (b == 2) r.push_back({l * d, 1, 1});
        return r;
      };
      for (int bw = 0; bw < 3; ++bw)
        for (int bb = 0; bb < 3; ++bb)
          for (const auto& w : side(bw, light, dark))
            for (const auto& b : side(bb, light - w.used_light, dark - w.used_dark))
              out[bw][bb] += ExactCount(w.ways) * b.ways;
    }
  return out;
}

PawnClass random_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(0, Column::kMaxLength);
  for (;;) {
    std::array<Column, 8> cols;
    for (auto& c : cols) {
      c.length = static_cast<std::uint8_t>(length(rng));
      c.mask = static_cast<std::uint8_t>(rng() & ((1u << c.length) - 1u));
    }
    PawnClass c(cols);
    if (c.valid()) return c;
  }
}

std::uint64_t non_adjacent_king_pairs() {
  std::uint64_t n = 0;
  for (int a = 0; a < 64; ++a)
    for (int b = 0; b < 64; ++b) n += (a != b && !kings_adjacent(a, b)) ? 1 : 0;
  return n;
}

}  // namespace chessbound::oracles
