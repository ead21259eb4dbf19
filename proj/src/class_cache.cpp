#include "chessbound/class_cache.hpp"

#include <array>
#include <atomic>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

namespace chessbound {

namespace fs = std::filesystem;

namespace {

constexpr std::array<char, 4> kMagic{'P', 'C', 'L', 'S'};
constexpr std::size_t kChunkRecords = 1 << 16;

void put_u64(std::uint8_t* out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint64_t get_u64(const std::uint8_t* in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{in[i]} << (8 * i);
  return v;
}

std::string temp_suffix() {
  static std::atomic<unsigned> counter{0};
  std::ostringstream os;
  os << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
     << counter.fetch_add(1);
  return os.str();
}

ClassFileHeader parse_header(std::istream& in, const fs::path& path) {
  std::array<std::uint8_t, kClassFileHeaderSize> h{};
  if (!in.read(reinterpret_cast<char*>(h.data()), h.size()))
    throw CacheError(path.string() + ": truncated header");
  if (std::memcmp(h.data(), kMagic.data(), kMagic.size()) != 0)
    throw CacheError(path.string() + ": bad magic");
  if (h[4] != kClassFileVersion) throw CacheError(path.string() + ": unsupported version");
  ClassFileHeader header;
  header.quadruplet = {h[5], h[6], h[7], h[8]};
  if (!header.quadruplet.valid()) throw CacheError(path.string() + ": bad quadruplet");
  header.count = get_u64(h.data() + 9);
  return header;
}

}  // namespace

std::string class_file_name(const Quadruplet& q) {
  std::ostringstream os;
  os << q.white_pieces << '-' << q.black_pieces << '-' << q.white_pawns << '-' << q.black_pawns
     << ".classes";
  return os.str();
}

void write_class_file(const fs::path& path, const Quadruplet& q,
                      std::span<const ClassKey> sorted_keys) {
  require_valid(q);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + temp_suffix();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open " + tmp.string() + " for writing");

    std::array<std::uint8_t, kClassFileHeaderSize> h{};
    std::memcpy(h.data(), kMagic.data(), kMagic.size());
    h[4] = kClassFileVersion;
    h[5] = static_cast<std::uint8_t>(q.white_pieces);
    h[6] = static_cast<std::uint8_t>(q.black_pieces);
    h[7] = static_cast<std::uint8_t>(q.white_pawns);
    h[8] = static_cast<std::uint8_t>(q.black_pawns);
    put_u64(h.data() + 9, sorted_keys.size());
    out.write(reinterpret_cast<const char*>(h.data()), h.size());

    std::vector<std::uint8_t> buf;
    buf.reserve(kChunkRecords * kClassRecordSize);
    for (std::size_t i = 0; i < sorted_keys.size(); ++i) {
      if (i && sorted_keys[i - 1] >= sorted_keys[i])
        throw ContractViolation("class keys must be strictly increasing");
      const auto rec = key_to_encoding(sorted_keys[i]);
      buf.insert(buf.end(), rec.begin(), rec.end());
      if (buf.size() == buf.capacity()) {
        out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        buf.clear();
      }
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    out.flush();
    if (!out) throw CacheError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

ClassFileHeader read_class_file_header(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open " + path.string());
  return parse_header(in, path);
}

ClassFileHeader stream_class_file(const fs::path& path,
                                  const std::function<void(std::span<const ClassKey>)>& sink) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open " + path.string());
  const ClassFileHeader header = parse_header(in, path);

  std::error_code ec;
  const auto size = fs::file_size(path, ec);
  if (ec || size != kClassFileHeaderSize + header.count * kClassRecordSize)
    throw CacheError(path.string() + ": length does not match record count");

  const Quadruplet& q = header.quadruplet;
  std::vector<std::uint8_t> buf(kChunkRecords * kClassRecordSize);
  std::vector<ClassKey> keys;
  keys.reserve(kChunkRecords);
  std::uint64_t remaining = header.count;
  ClassKey previous = 0;
  bool first = true;
  while (remaining > 0) {
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, kChunkRecords));
    if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n * kClassRecordSize)))
      throw CacheError(path.string() + ": truncated body");
    keys.clear();
    for (std::size_t i = 0; i < n; ++i) {
      ClassEncoding rec;
      std::memcpy(rec.data(), buf.data() + i * kClassRecordSize, kClassRecordSize);
      const auto c = canonical_decode(rec);
      if (!c) throw CacheError(path.string() + ": malformed record");
      if (c->white_pawns() != q.white_pawns || c->black_pawns() != q.black_pawns)
        throw CacheError(path.string() + ": record inconsistent with quadruplet");
      const ClassKey key = pack(*c);
      if (!first && key <= previous) throw CacheError(path.string() + ": records not sorted");
      previous = key;
      first = false;
      keys.push_back(key);
    }
    sink(keys);
    remaining -= n;
  }
  return header;
}

std::vector<ClassKey> read_class_file(const fs::path& path, ClassFileHeader* header) {
  std::vector<ClassKey> out;
  out.reserve(static_cast<std::size_t>(read_class_file_header(path).count));
  const auto h = stream_class_file(
      path, [&](std::span<const ClassKey> keys) { out.insert(out.end(), keys.begin(), keys.end()); });
  if (header) *header = h;
  return out;
}

}  // namespace chessbound
