#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "chessbound/class_cache.hpp"
#include "chessbound/oracles.hpp"
#include "chessbound/pawn_classes.hpp"
#include "temp_dir.hpp"

using namespace chessbound;

namespace {

constexpr CaptureEvent kWhitePawnByPiece{Color::white, Nature::pawn, Nature::piece};
constexpr CaptureEvent kWhitePawnByPawn{Color::white, Nature::pawn, Nature::pawn};
constexpr CaptureEvent kWhitePieceByPawn{Color::white, Nature::piece, Nature::pawn};
constexpr CaptureEvent kWhitePieceByPiece{Color::white, Nature::piece, Nature::piece};

CaptureEvent mirrored(CaptureEvent e) {
  e.captured_color = opposite(e.captured_color);
  return e;
}

std::vector<ClassKey> keys_of(const std::vector<PawnClass>& classes) {
  std::vector<ClassKey> out;
  for (const auto& c : classes) out.push_back(pack(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("start class") {
  const PawnClass c = start_class();
  for (const auto& file : c.markers()) CHECK(file == std::vector<int>{-1, +1});
  CHECK(c.white_pawns() == 8);
  CHECK(c.black_pawns() == 8);
  CHECK(class_position_count(c) == 2562890625);
}

TEST_CASE("class position count") {
  CHECK(class_position_count(PawnClass{}) == 1);
  auto c = start_class();
  c.column(0) = {1, 0};
  CHECK(class_position_count(c) == 1025156250);
}

TEST_CASE("captures from the start class") {
  const PawnClass s = start_class();
  CHECK(apply_capture(s, kWhitePawnByPiece).size() == 8);
  CHECK(apply_capture(s, kWhitePawnByPawn).size() == 14);
  CHECK(apply_capture(s, kWhitePieceByPawn).size() == 28);
  CHECK(apply_capture(s, kWhitePieceByPiece) == std::vector<PawnClass>{s});
  // Black captured: same sizes by symmetry.
  CHECK(apply_capture(s, mirrored(kWhitePawnByPiece)).size() == 8);
  CHECK(apply_capture(s, mirrored(kWhitePawnByPawn)).size() == 14);
  CHECK(apply_capture(s, mirrored(kWhitePieceByPawn)).size() == 28);
}

TEST_CASE("pawn takes pawn keeps the captured pawn's place") {
  const auto c = PawnClass::from_markers({{{-1}, {+1, +1}, {}, {}, {}, {}, {}, {}}});
  const auto out = apply_capture(c, kWhitePawnByPawn);
  // The black pawn of file a can take either white pawn of file b.
  REQUIRE(out.size() == 2);
  CHECK(out[0].markers()[0].empty());
  std::set<std::vector<int>> files_b{out[0].markers()[1], out[1].markers()[1]};
  CHECK(files_b == std::set<std::vector<int>>{{-1, +1}, {+1, -1}});
}

TEST_CASE("pawn takes piece skips full neighbouring files") {
  const auto c = PawnClass::from_markers({{{-1}, {+1, +1, +1, +1, +1, +1}, {}, {}, {}, {}, {}, {}}});
  CHECK(apply_capture(c, kWhitePieceByPawn).empty());
  const auto d = PawnClass::from_markers({{{}, {-1}, {+1, +1, +1, +1, +1, +1}, {}, {}, {}, {}, {}}});
  const auto out = apply_capture(d, kWhitePieceByPawn);
  REQUIRE(out.size() == 1);  // only file a is open
  CHECK(out[0].markers()[0] == std::vector<int>{-1});
}

TEST_CASE("captures that cannot happen give nothing") {
  const auto only_white = PawnClass::from_markers({{{+1}, {+1}, {}, {}, {}, {}, {}, {}}});
  CHECK(apply_capture(only_white, kWhitePieceByPawn).empty());
  CHECK(apply_capture(only_white, kWhitePawnByPawn).empty());
  CHECK(apply_capture(only_white, mirrored(kWhitePawnByPiece)).empty());
  CHECK(apply_capture(PawnClass{}, kWhitePawnByPiece).empty());
}

TEST_CASE("captures conserve markers and respect colour swap") {
  std::mt19937_64 rng(3);
  const CaptureEvent events[] = {kWhitePawnByPiece, kWhitePawnByPawn, kWhitePieceByPawn,
                                 kWhitePieceByPiece};
  for (int i = 0; i < 2000; ++i) {
    const PawnClass c = oracles::random_class(rng);
    for (auto e : events)
      for (auto ev : {e, mirrored(e)}) {
        const auto out = apply_capture(c, ev);
        const int dw = ev.captured_color == Color::white && ev.captured_nature == Nature::pawn;
        const int db = ev.captured_color == Color::black && ev.captured_nature == Nature::pawn;
        for (const auto& r : out) {
          REQUIRE(r.valid());
          REQUIRE(r.white_pawns() == c.white_pawns() - dw);
          REQUIRE(r.black_pawns() == c.black_pawns() - db);
        }
        std::vector<PawnClass> swapped;
        for (const auto& r : apply_capture(c.color_swapped(), mirrored(ev)))
          swapped.push_back(r.color_swapped());
        REQUIRE(keys_of(swapped) == keys_of(out));
      }
  }
}

TEST_CASE("edge classes union both capturer natures") {
  const PawnClass s = start_class();
  CHECK(edge_classes(s, {{8, 8, 8, 8}, {8, 8, 7, 8}, Color::white, Nature::pawn}).size() == 22);
  CHECK(edge_classes(s, {{8, 8, 8, 8}, {8, 8, 8, 7}, Color::black, Nature::pawn}).size() == 22);
  CHECK(edge_classes(s, {{8, 8, 8, 8}, {7, 8, 8, 8}, Color::white, Nature::piece}).size() == 29);

  // No black pawn left in edge.to: only a black piece can have captured.
  const auto c = PawnClass::from_markers({{{+1, -1}, {+1}, {}, {}, {}, {}, {}, {}}});
  const GraphEdge edge{{8, 8, 2, 1}, {7, 8, 2, 1}, Color::white, Nature::piece};
  const GraphEdge no_pawn_edge{{8, 8, 2, 0}, {7, 8, 2, 0}, Color::white, Nature::piece};
  CHECK(edge_classes(c, edge).size() > 1);
  const auto lone = PawnClass::from_markers({{{+1}, {+1}, {}, {}, {}, {}, {}, {}}});
  CHECK(edge_classes(lone, no_pawn_edge) == std::vector<PawnClass>{lone});
}

TEST_CASE("class count oracle matches the formula") {
  CHECK(oracles::verify_class_count_oracle(start_class()) == 2562890625);
  CHECK(oracles::verify_class_count_oracle(PawnClass{}) == 1);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const PawnClass c = oracles::random_class(rng);
    REQUIRE(oracles::verify_class_count_oracle(c) == class_position_count(c));
  }
}

TEST_CASE("engine: class counts and pawn bounds near the root") {
  TempDir dir;
  ClassEngine engine({dir.path(), 1});
  CHECK(engine.quadruplet_classes(kRootQuadruplet).keys == std::vector<ClassKey>{pack(start_class())});
  CHECK(engine.quadruplet_classes({8, 8, 7, 8}).count() == 22);
  CHECK(engine.quadruplet_classes({8, 8, 8, 7}).count() == 22);
  CHECK(engine.quadruplet_classes({7, 8, 8, 8}).count() == 29);
  CHECK(engine.quadruplet_classes({8, 8, 8, 4}).count() == 2682);
  CHECK(engine.quadruplet_classes({8, 8, 8, 1}).count() == 2512);
  CHECK(engine.pawn_bound(kRootQuadruplet) == 2562890625);
  CHECK(engine.pawn_bound({8, 8, 7, 8}) == 22553437500);
  CHECK(engine.pawn_bound({7, 8, 8, 8}) == 40835390625);
  CHECK_THROWS_AS(engine.quadruplet_classes({6, 6, 6, 6}), ContractViolation);
}

TEST_CASE("engine: stored classes carry their quadruplet's pawn counts") {
  TempDir dir;
  ClassEngine engine({dir.path(), 1});
  engine.build_layers_down_to(29);
  for (int men = 29; men <= 32; ++men)
    for (const auto& q : quadruplets_with_men(men)) {
      const ClassSet set = engine.quadruplet_classes(q);
      REQUIRE(std::is_sorted(set.keys.begin(), set.keys.end()));
      for (ClassKey k : set.keys) {
        const PawnClass c = unpack(k);
        REQUIRE(c.white_pawns() == q.white_pawns);
        REQUIRE(c.black_pawns() == q.black_pawns);
      }
    }
}

TEST_CASE("engine: mirrored quadruplets hold mirrored classes") {
  TempDir dir;
  ClassEngine engine({dir.path(), 1});
  for (const auto& q : quadruplets_with_men(29)) {
    const ClassSet a = engine.quadruplet_classes(q);
    const ClassSet b = engine.quadruplet_classes(q.color_swapped());
    std::vector<ClassKey> image;
    for (ClassKey k : a.keys) image.push_back(color_swapped(k));
    std::sort(image.begin(), image.end());
    REQUIRE(image == b.keys);
    REQUIRE(engine.pawn_bound(q) == engine.pawn_bound(q.color_swapped()));
  }
}

TEST_CASE("engine: warm cache reproduces the cold run") {
  TempDir dir;
  std::vector<std::vector<ClassKey>> cold;
  {
    ClassEngine engine({dir.path(), 1});
    for (const auto& q : quadruplets_with_men(29)) cold.push_back(engine.quadruplet_classes(q).keys);
  }
  ClassEngine engine({dir.path(), 1});
  std::size_t i = 0;
  for (const auto& q : quadruplets_with_men(29)) {
    CHECK(engine.summary(q).build_seconds == 0.0);
    CHECK(engine.quadruplet_classes(q).keys == cold[i++]);
  }
}

TEST_CASE("engine: worker count does not change the classes") {
  TempDir one, many;
  ClassEngine a({one.path(), 1}), b({many.path(), 4});
  a.build_layers_down_to(28);
  b.build_layers_down_to(28);
  for (const auto& q : quadruplets_with_men(28))
    REQUIRE(a.quadruplet_classes(q).keys == b.quadruplet_classes(q).keys);
}

TEST_CASE("class file layout") {
  TempDir dir;
  ClassEngine engine({dir.path(), 1});
  engine.quadruplet_classes(kRootQuadruplet);
  const auto path = dir.path() / "8-8-8-8.classes";
  REQUIRE(std::filesystem::exists(path));
  std::ifstream in(path, std::ios::binary);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), {});
  std::vector<unsigned char> expected{'P', 'C', 'L', 'S', 1, 8, 8, 8, 8, 1, 0, 0, 0, 0, 0, 0, 0};
  for (int f = 0; f < 8; ++f) {
    expected.push_back(2);
    expected.push_back(0b10);
  }
  CHECK(bytes == expected);
}

TEST_CASE("corrupt class files raise cache errors") {
  TempDir dir;
  const Quadruplet q{8, 8, 7, 8};  // canonical, so it owns the file
  {
    ClassEngine engine({dir.path(), 1});
    engine.quadruplet_classes(q);
  }
  const auto path = dir.path() / class_file_name(q);

  SUBCASE("bad magic") {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.put('X');
  }
  SUBCASE("truncated body") { std::filesystem::resize_file(path, std::filesystem::file_size(path) - 3); }
  SUBCASE("records out of order") {
    std::vector<unsigned char> raw;
    {
      std::ifstream in(path, std::ios::binary);
      raw.assign(std::istreambuf_iterator<char>(in), {});
    }
    std::swap_ranges(raw.begin() + 17, raw.begin() + 33, raw.begin() + 33);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  }

  ClassEngine engine({dir.path(), 1});
  CHECK_THROWS_AS(engine.quadruplet_classes(q), CacheError);
}
