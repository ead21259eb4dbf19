#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chessbound/core_types.hpp"

namespace chessbound {

/// Malformed or unreadable class file.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Layout (little-endian):
//   "PCLS" | version:u8 | Pw Pb pw pb : u8 x4 | count:u64 | count x 16-byte records
// Records are class encodings sorted lexicographically, without duplicates.
inline constexpr std::uint8_t kClassFileVersion = 1;
inline constexpr std::size_t kClassFileHeaderSize = 4 + 1 + 4 + 8;
inline constexpr std::size_t kClassRecordSize = 16;

/// "Pw-Pb-pw-pb.classes"
std::string class_file_name(const Quadruplet& q);

/// Writes to a temporary sibling and renames it into place.
/// `sorted_keys` must be strictly increasing.
void write_class_file(const std::filesystem::path& path, const Quadruplet& q,
                      std::span<const ClassKey> sorted_keys);

struct ClassFileHeader {
  Quadruplet quadruplet;
  std::uint64_t count = 0;
};

ClassFileHeader read_class_file_header(const std::filesystem::path& path);

/// Streams the records of a class file in order, validating header, record
/// syntax, ordering and the marker counts against the header quadruplet.
ClassFileHeader stream_class_file(const std::filesystem::path& path,
                                  const std::function<void(std::span<const ClassKey>)>& sink);

std::vector<ClassKey> read_class_file(const std::filesystem::path& path,
                                      ClassFileHeader* header = nullptr);

}  // namespace chessbound
