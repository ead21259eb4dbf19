#pragma once

// Capture rules evaluated directly on packed class keys. Shared by the public
// apply_capture and the class engine's inner loop.

#include <array>
#include <cstdint>

#include "chessbound/core_types.hpp"
#include "chessbound/pawn_classes.hpp"

namespace chessbound::detail {

inline constexpr int kBitsPerFile = 7;
inline constexpr ClassKey kFileMask = (ClassKey{1} << kBitsPerFile) - 1;

constexpr int file_shift(int file) { return kBitsPerFile * (7 - file); }

constexpr std::uint32_t state_of(unsigned length, unsigned mask) {
  return (1u << length) - 1u + mask;
}

constexpr unsigned remove_bit(unsigned mask, int i) {
  const unsigned low = (1u << i) - 1u;
  return (mask & low) | ((mask >> (i + 1)) << i);
}

constexpr unsigned insert_bit(unsigned mask, int i, unsigned bit) {
  const unsigned low = (1u << i) - 1u;
  return (mask & low) | (bit << i) | ((mask >> i) << (i + 1));
}

struct Files {
  std::array<std::uint8_t, 8> length;
  std::array<std::uint8_t, 8> mask;
};

struct StateTable {
  std::array<std::uint8_t, 128> length{};
  std::array<std::uint8_t, 128> mask{};
  std::array<std::uint32_t, 128> positions{};  // C(6, length)
};

inline constexpr StateTable kStates = [] {
  StateTable t{};
  constexpr std::uint32_t c6[7] = {1, 6, 15, 20, 15, 6, 1};
  for (unsigned len = 0; len <= 6; ++len)
    for (unsigned m = 0; m < (1u << len); ++m) {
      const auto s = state_of(len, m);
      t.length[s] = static_cast<std::uint8_t>(len);
      t.mask[s] = static_cast<std::uint8_t>(m);
      t.positions[s] = c6[len];
    }
  return t;
}();

inline Files files_of(ClassKey key) {
  Files f;
  for (int i = 0; i < 8; ++i) {
    const auto s = static_cast<unsigned>((key >> file_shift(i)) & kFileMask);
    f.length[i] = kStates.length[s];
    f.mask[i] = kStates.mask[s];
  }
  return f;
}

inline ClassKey with_file(ClassKey key, int file, unsigned length, unsigned mask) {
  const int s = file_shift(file);
  return (key & ~(kFileMask << s)) | (ClassKey{state_of(length, mask)} << s);
}

/// Product of C(6, k_i) over the files of a packed class.
inline std::uint64_t position_count(ClassKey key) {
  std::uint64_t r = 1;
  for (int i = 0; i < 8; ++i) r *= kStates.positions[(key >> file_shift(i)) & kFileMask];
  return r;
}

/// Calls emit(child_key) for every class reachable by one capture of kind e.
/// The same child may be emitted more than once.
template <class Emit>
void for_each_capture(ClassKey key, const CaptureEvent& e, Emit&& emit) {
  // Bit value of the capturer's and the captured side's markers.
  const unsigned own = e.captured_color == Color::white ? 0u : 1u;
  const unsigned prey = own ^ 1u;
  const bool piece_taken = e.captured_nature == Nature::piece;
  const bool pawn_takes = e.capturer_nature == Nature::pawn;

  if (piece_taken && !pawn_takes) {
    emit(key);
    return;
  }

  const Files f = files_of(key);

  if (!pawn_takes) {
    // A piece takes a pawn: drop one of the captured side's markers.
    for (int j = 0; j < 8; ++j)
      for (int i = 0; i < f.length[j]; ++i)
        if (((f.mask[j] >> i) & 1u) == prey)
          emit(with_file(key, j, f.length[j] - 1u, remove_bit(f.mask[j], i)));
    return;
  }

  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < f.length[j]; ++i) {
      if (((f.mask[j] >> i) & 1u) != own) continue;
      const ClassKey lifted = with_file(key, j, f.length[j] - 1u, remove_bit(f.mask[j], i));
      for (int a = j - 1; a <= j + 1; a += 2) {
        if (a < 0 || a > 7) continue;
        if (piece_taken) {
          // The pawn lands anywhere in the neighbouring file, if it has room.
          if (f.length[a] >= Column::kMaxLength) continue;
          for (int at = 0; at <= f.length[a]; ++at)
            emit(with_file(lifted, a, f.length[a] + 1u, insert_bit(f.mask[a], at, own)));
        } else {
          // The pawn replaces an enemy pawn of the neighbouring file in place.
          for (int at = 0; at < f.length[a]; ++at)
            if (((f.mask[a] >> at) & 1u) == prey)
              emit(with_file(lifted, a, f.length[a], f.mask[a] ^ (1u << at)));
        }
      }
    }
  }
}

}  // namespace chessbound::detail
