#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chessbound {

/// Arbitrary-precision non-negative count. Every bound crosses API
/// boundaries as an ExactCount, even where the value would fit a machine word.
using ExactCount = boost::multiprecision::cpp_int;

/// Raised when a caller breaks a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Color : std::uint8_t { white, black };
enum class Nature : std::uint8_t { piece, pawn };

constexpr Color opposite(Color c) noexcept {
  return c == Color::white ? Color::black : Color::white;
}

/// Cell of the diagram partition: piece and pawn counts per side.
/// Piece counts include the king.
struct Quadruplet {
  int white_pieces = 8;
  int black_pieces = 8;
  int white_pawns = 8;
  int black_pawns = 8;

  constexpr int men() const noexcept {
    return white_pieces + black_pieces + white_pawns + black_pawns;
  }

  constexpr bool valid() const noexcept {
    return white_pieces >= 1 && white_pieces <= 8 && black_pieces >= 1 &&
           black_pieces <= 8 && white_pawns >= 0 && white_pawns <= 8 &&
           black_pawns >= 0 && black_pawns <= 8;
  }

  constexpr Quadruplet color_swapped() const noexcept {
    return {black_pieces, white_pieces, black_pawns, white_pawns};
  }

  constexpr int pieces(Color c) const noexcept {
    return c == Color::white ? white_pieces : black_pieces;
  }
  constexpr int pawns(Color c) const noexcept {
    return c == Color::white ? white_pawns : black_pawns;
  }

  constexpr auto operator<=>(const Quadruplet&) const = default;
};

inline constexpr Quadruplet kRootQuadruplet{8, 8, 8, 8};

/// "(8,8,8,8)"
std::string to_string(const Quadruplet& q);

/// Throws ContractViolation unless q.valid().
void require_valid(const Quadruplet& q);

/// One file of a pawn-structure class. Element 0 is the pawn closest to the
/// seventh rank; bit i of `mask` is set when element i is a white pawn.
struct Column {
  std::uint8_t length = 0;
  std::uint8_t mask = 0;

  static constexpr int kMaxLength = 6;

  int whites() const noexcept { return __builtin_popcount(mask); }
  int blacks() const noexcept { return length - whites(); }
  /// +1 for a white pawn, -1 for a black pawn.
  int marker(int i) const noexcept { return (mask >> i) & 1 ? +1 : -1; }

  bool valid() const noexcept {
    return length <= kMaxLength && (mask >> length) == 0;
  }

  constexpr auto operator<=>(const Column&) const = default;
};

/// Class of pawn structure: the top-to-bottom colour sequence of pawns on
/// each of the eight files (a..h).
class PawnClass {
 public:
  PawnClass() = default;
  explicit PawnClass(const std::array<Column, 8>& columns) : columns_(columns) {}

  /// Builds a class from marker lists, e.g. {{-1, +1}, {}, ...}.
  static PawnClass from_markers(const std::array<std::vector<int>, 8>& files);
  std::array<std::vector<int>, 8> markers() const;

  const Column& column(int file) const { return columns_[file]; }
  Column& column(int file) { return columns_[file]; }
  const std::array<Column, 8>& columns() const noexcept { return columns_; }

  int white_pawns() const noexcept;
  int black_pawns() const noexcept;

  /// Column lengths within [0,6], marker counts within [0,8] per side.
  bool valid() const noexcept;

  /// Image under the colour swap: markers negated, each file read bottom-up.
  PawnClass color_swapped() const;

  auto operator<=>(const PawnClass&) const = default;

 private:
  std::array<Column, 8> columns_{};
};

std::string to_string(const PawnClass& c);

/// On-disk record: per file one length byte then one sign-mask byte.
using ClassEncoding = std::array<std::uint8_t, 16>;

ClassEncoding canonical_encode(const PawnClass& c);
/// Empty when the bytes do not describe a valid class.
std::optional<PawnClass> canonical_decode(const ClassEncoding& bytes);

/// In-memory form of a class: 7 bits per file (file a in the top group),
/// each group holding 2^length - 1 + mask. Ordering of keys matches the
/// lexicographic ordering of the 16-byte encodings.
using ClassKey = std::uint64_t;

ClassKey pack(const PawnClass& c) noexcept;
PawnClass unpack(ClassKey key) noexcept;
ClassKey encoding_to_key(const ClassEncoding& bytes);
ClassEncoding key_to_encoding(ClassKey key) noexcept;
ClassKey color_swapped(ClassKey key) noexcept;

/// Exact C(n, k); zero when k > n.
ExactCount binomial(unsigned n, unsigned k);

/// C(n, k) for arguments small enough that the result fits 64 bits
/// (n <= 62 suffices). Throws std::overflow_error otherwise.
std::uint64_t binomial_u64(unsigned n, unsigned k);

}  // namespace chessbound
