#include "verify.hpp"

#include <functional>
#include <random>
#include <string>

#include "chessbound/oracles.hpp"
#include "chessbound/piece_placement.hpp"
#include "chessbound/sparse_board.hpp"

namespace chessbound {

bool run_verification(ClassEngine& engine, std::ostream& out, bool slow) {
  bool all = true;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      out << "  (" << e.what() << ")\n";
    }
    out << (ok ? "PASS " : "FAIL ") << name << '\n' << std::flush;
    all = all && ok;
  };

  std::mt19937_64 rng(20240531);

  check("encoding round-trip on 100000 random classes", [&] {
    for (int i = 0; i < 100000; ++i) {
      const PawnClass c = oracles::random_class(rng);
      const auto decoded = canonical_decode(canonical_encode(c));
      if (!decoded || *decoded != c || unpack(pack(c)) != c) return false;
    }
    return true;
  });

  check("class position count equals file-filling enumeration on 1000 random classes", [&] {
    for (int i = 0; i < 1000; ++i) {
      const PawnClass c = oracles::random_class(rng);
      if (class_position_count(c) != oracles::verify_class_count_oracle(c)) return false;
    }
    return true;
  });

  check("placement count equals brute force on small boards without bishops", [&] {
    for (int w = 1; w <= 3; ++w)
      for (int b = 1; b <= 5 - w; ++b)
        for (const auto& mw : piece_multisets(w))
          for (const auto& mb : piece_multisets(b)) {
            if (mw.bishops || mb.bishops) continue;
            for (int n = w + b; n <= 12; ++n)
              if (placement_count(mw, mb, n) !=
                  oracles::count_placements_bruteforce(mw, mb, n / 2, n - n / 2))
                return false;
          }
    return true;
  });

  check("bishop pair bound dominates every light/dark split up to 64 squares", [&] {
    for (int n = 0; n <= 64; ++n)
      for (int light = 0; light <= n; ++light)
        if (ExactCount(light * (n - light)) > bishop_pair_bound(n)) return false;
    return true;
  });

  check("brute-force kings-and-bishops table equals the published table",
        [&] { return f_table_bruteforce(engine.options().workers) == f_table(); });

  check("kings-and-bishops rows sum to the back-rank-free count", [&] {
    const auto sums = oracles::f_table_row_sums();
    for (int bw = 0; bw < 3; ++bw)
      for (int bb = 0; bb < 3; ++bb) {
        ExactCount s = 0;
        for (int k = 0; k <= FTable::kMaxInA; ++k) s += f_table()(k, bw, bb);
        if (s != sums[bw][bb]) return false;
      }
    return sums[0][0] == 3612 && oracles::non_adjacent_king_pairs() == 3612;
  });

  check("sparse bound for two men is 3612", [&] { return sparse_bound(2) == 3612; });

  struct Expected {
    Quadruplet q;
    std::uint64_t classes;
  };
  std::vector<Expected> expected{{{8, 8, 8, 8}, 1},    {{8, 8, 7, 8}, 22},
                                 {{7, 8, 8, 8}, 29},   {{8, 8, 8, 4}, 2682},
                                 {{8, 8, 8, 1}, 2512}};
  if (slow) expected.push_back({{7, 7, 7, 7}, 122524});
  for (const auto& e : expected)
    check("class count of " + to_string(e.q) + " is " + std::to_string(e.classes),
          [&] { return engine.summary(e.q).classes == e.classes; });

  check("stored classes match their quadruplet's pawn counts", [&] {
    for (const auto& e : expected) {
      const ClassSet set = engine.quadruplet_classes(e.q);
      for (ClassKey k : set.keys) {
        const PawnClass c = unpack(k);
        if (c.white_pawns() != e.q.white_pawns || c.black_pawns() != e.q.black_pawns)
          return false;
      }
    }
    return true;
  });

  return all;
}

}  // namespace chessbound
