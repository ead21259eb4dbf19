#include "chessbound/sparse_board.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace chessbound {

namespace {

using Bitboard = std::uint64_t;

constexpr Bitboard kBackRanks = 0xFF000000000000FFull;

constexpr Bitboard make_light() {
  Bitboard b = 0;
  for (int sq = 0; sq < 64; ++sq)
    if (((sq / 8) + (sq % 8)) % 2 == 1) b |= Bitboard{1} << sq;
  return b;
}

constexpr Bitboard kLight = make_light();
constexpr Bitboard kDark = ~kLight;

bool kings_adjacent(int a, int b) {
  const int dr = a / 8 - b / 8;
  const int df = a % 8 - b % 8;
  return dr >= -1 && dr <= 1 && df >= -1 && df <= 1;
}

struct PartialTable {
  // [k][bw][bb]
  std::array<std::array<std::array<std::uint64_t, 3>, 3>, 7> v{};
};

// Places the remaining bishop slots; the final slot is tallied by popcount.
void place(std::span<const Bitboard> slots, Bitboard occupied, int in_a,
           std::array<std::uint64_t, 7>& bins) {
  const Bitboard allowed = slots.front() & ~occupied;
  if (slots.size() == 1) {
    bins[in_a + 1] += std::popcount(allowed & kBackRanks);
    bins[in_a] += std::popcount(allowed & ~kBackRanks);
    return;
  }
  for (Bitboard rest = allowed; rest; rest &= rest - 1) {
    const Bitboard sq = rest & -rest;
    place(slots.subspan(1), occupied | sq, in_a + ((sq & kBackRanks) ? 1 : 0), bins);
  }
}

std::vector<Bitboard> bishop_slots(int white, int black) {
  std::vector<Bitboard> slots;
  for (int b : {white, black}) {
    if (b == 1) slots.push_back(~Bitboard{0});
    if (b == 2) {
      slots.push_back(kLight);
      slots.push_back(kDark);
    }
  }
  return slots;
}

constexpr std::array<std::array<std::array<std::uint64_t, 3>, 3>, 7> kPublished{{
    {{{1952, 89792, 1031644}, {89792, 4040640, 45392336}, {1031644, 45392336, 498806704}}},
    {{{1448, 99288, 1517632}, {99288, 6003920, 84799744}, {1517632, 84799744, 1130721152}}},
    {{{212, 31896, 757472}, {31896, 2988432, 57608192}, {757472, 57608192, 978967872}}},
    {{{0, 2968, 152320}, {2968, 589008, 17763648}, {152320, 17763648, 413211008}}},
    {{{0, 0, 10276}, {0, 38584, 2473408}, {10276, 2473408, 89297152}}},
    {{{0, 0, 0}, {0, 0, 123312}, {0, 123312, 9324672}}},
    {{{0, 0, 0}, {0, 0, 0}, {0, 0, 364560}}},
}};

}  // namespace

const FTable& f_table() {
  static const FTable table = [] {
    FTable t;
    for (int k = 0; k <= FTable::kMaxInA; ++k)
      for (int bw = 0; bw < 3; ++bw)
        for (int bb = 0; bb < 3; ++bb) t(k, bw, bb) = kPublished[k][bw][bb];
    return t;
  }();
  return table;
}

FTable f_table_bruteforce(unsigned workers) {
  std::vector<std::pair<int, int>> kings;
  for (int w = 0; w < 64; ++w)
    for (int b = 0; b < 64; ++b)
      if (w != b && !kings_adjacent(w, b)) kings.emplace_back(w, b);

  PartialTable total;
  std::mutex total_mutex;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    PartialTable local;
    for (std::size_t i; (i = next.fetch_add(1)) < kings.size();) {
      const auto [wk, bk] = kings[i];
      const Bitboard occupied = (Bitboard{1} << wk) | (Bitboard{1} << bk);
      const int kings_in_a = std::popcount(occupied & kBackRanks);
      for (int bw = 0; bw < 3; ++bw)
        for (int bb = 0; bb < 3; ++bb) {
          const auto slots = bishop_slots(bw, bb);
          std::array<std::uint64_t, 7> bins{};
          if (slots.empty())
            bins[kings_in_a] = 1;
          else
            place(slots, occupied, kings_in_a, bins);
          for (int k = 0; k < 7; ++k) local.v[k][bw][bb] += bins[k];
        }
    }
    std::lock_guard lock(total_mutex);
    for (int k = 0; k < 7; ++k)
      for (int bw = 0; bw < 3; ++bw)
        for (int bb = 0; bb < 3; ++bb) total.v[k][bw][bb] += local.v[k][bw][bb];
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  FTable out;
  for (int k = 0; k < 7; ++k)
    for (int bw = 0; bw < 3; ++bw)
      for (int bb = 0; bb < 3; ++bb) out(k, bw, bb) = total.v[k][bw][bb];
  return out;
}

ExactCount sparse_bound(int men) {
  if (men < 2 || men > 24) throw ContractViolation("sparse bound covers 2 to 24 men");
  const FTable& f = f_table();

  struct Others {
    int queens, rooks, knights;
    int count() const { return queens + rooks + knights; }
  };
  std::vector<Others> others;
  for (int q = 0; q <= 1; ++q)
    for (int r = 0; r <= 2; ++r)
      for (int n = 0; n <= 2; ++n) others.push_back({q, r, n});

  ExactCount total = 0;
  for (int bw = 0; bw <= 2; ++bw)
    for (int bb = 0; bb <= 2; ++bb)
      for (const auto& ow : others)
        for (const auto& ob : others) {
          const int pieces = 2 + bw + bb + ow.count() + ob.count();
          for (int pw = 0; pw <= 8; ++pw) {
            const int pb = men - pieces - pw;
            if (pb < 0 || pb > 8) continue;

            ExactCount rest = 1;
            int free = 62 - bw - bb - pw - pb;
            for (int group : {ow.queens, ow.rooks, ow.knights, ob.queens, ob.rooks, ob.knights}) {
              if (free < group) {
                rest = 0;
                break;
              }
              rest *= binomial(static_cast<unsigned>(free), static_cast<unsigned>(group));
              free -= group;
            }
            if (rest == 0) continue;

            for (int k = 0; k <= FTable::kMaxInA; ++k) {
              if (f(k, bw, bb) == 0) continue;
              const int pawn_squares = 48 - (2 + bw + bb - k);
              total += f(k, bw, bb) * binomial(pawn_squares, pw) *
                       binomial(pawn_squares - pw, pb) * rest;
            }
          }
        }
  return total;
}

}  // namespace chessbound
