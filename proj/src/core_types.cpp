#include "chessbound/core_types.hpp"

#include <bit>
#include <limits>
#include <sstream>

namespace chessbound {

namespace {

constexpr int kBitsPerFile = 7;
constexpr ClassKey kFileMask = (ClassKey{1} << kBitsPerFile) - 1;

constexpr int shift_of(int file) { return kBitsPerFile * (7 - file); }

constexpr std::uint8_t column_state(Column c) {
  return static_cast<std::uint8_t>((1u << c.length) - 1u + c.mask);
}

constexpr Column column_from_state(unsigned state) {
  const unsigned length = std::bit_width(state + 1) - 1;
  return {static_cast<std::uint8_t>(length),
          static_cast<std::uint8_t>(state + 1 - (1u << length))};
}

constexpr Column swap_column(Column c) {
  std::uint8_t mask = 0;
  for (int i = 0; i < c.length; ++i)
    if (!((c.mask >> (c.length - 1 - i)) & 1)) mask |= std::uint8_t(1u << i);
  return {c.length, mask};
}

constexpr std::array<std::uint8_t, 128> make_swap_table() {
  std::array<std::uint8_t, 128> t{};
  for (unsigned s = 0; s < 127; ++s) t[s] = column_state(swap_column(column_from_state(s)));
  return t;
}

constexpr auto kSwapState = make_swap_table();

}  // namespace

std::string to_string(const Quadruplet& q) {
  std::ostringstream os;
  os << '(' << q.white_pieces << ',' << q.black_pieces << ',' << q.white_pawns << ','
     << q.black_pawns << ')';
  return os.str();
}

void require_valid(const Quadruplet& q) {
  if (!q.valid()) throw ContractViolation("invalid quadruplet " + to_string(q));
}

PawnClass PawnClass::from_markers(const std::array<std::vector<int>, 8>& files) {
  PawnClass c;
  for (int f = 0; f < 8; ++f) {
    const auto& file = files[f];
    if (file.size() > Column::kMaxLength)
      throw ContractViolation("pawn column longer than 6");
    Column& col = c.columns_[f];
    col.length = static_cast<std::uint8_t>(file.size());
    for (std::size_t i = 0; i < file.size(); ++i) {
      if (file[i] == +1)
        col.mask |= std::uint8_t(1u << i);
      else if (file[i] != -1)
        throw ContractViolation("pawn marker must be +1 or -1");
    }
  }
  if (!c.valid()) throw ContractViolation("more than eight pawns of one colour");
  return c;
}

std::array<std::vector<int>, 8> PawnClass::markers() const {
  std::array<std::vector<int>, 8> out;
  for (int f = 0; f < 8; ++f)
    for (int i = 0; i < columns_[f].length; ++i) out[f].push_back(columns_[f].marker(i));
  return out;
}

int PawnClass::white_pawns() const noexcept {
  int n = 0;
  for (const auto& c : columns_) n += c.whites();
  return n;
}

int PawnClass::black_pawns() const noexcept {
  int n = 0;
  for (const auto& c : columns_) n += c.blacks();
  return n;
}

bool PawnClass::valid() const noexcept {
  for (const auto& c : columns_)
    if (!c.valid()) return false;
  return white_pawns() <= 8 && black_pawns() <= 8;
}

PawnClass PawnClass::color_swapped() const {
  PawnClass out;
  for (int f = 0; f < 8; ++f) out.columns_[f] = swap_column(columns_[f]);
  return out;
}

std::string to_string(const PawnClass& c) {
  std::ostringstream os;
  os << '[';
  for (int f = 0; f < 8; ++f) {
    if (f) os << ' ';
    os << '(';
    for (int i = 0; i < c.column(f).length; ++i) os << (c.column(f).marker(i) > 0 ? '+' : '-');
    os << ')';
  }
  os << ']';
  return os.str();
}

ClassEncoding canonical_encode(const PawnClass& c) {
  ClassEncoding out{};
  for (int f = 0; f < 8; ++f) {
    out[2 * f] = c.column(f).length;
    out[2 * f + 1] = c.column(f).mask;
  }
  return out;
}

std::optional<PawnClass> canonical_decode(const ClassEncoding& bytes) {
  std::array<Column, 8> cols;
  for (int f = 0; f < 8; ++f) cols[f] = {bytes[2 * f], bytes[2 * f + 1]};
  PawnClass c(cols);
  if (!c.valid()) return std::nullopt;
  return c;
}

ClassKey pack(const PawnClass& c) noexcept {
  ClassKey key = 0;
  for (int f = 0; f < 8; ++f) key |= ClassKey{column_state(c.column(f))} << shift_of(f);
  return key;
}

PawnClass unpack(ClassKey key) noexcept {
  std::array<Column, 8> cols;
  for (int f = 0; f < 8; ++f)
    cols[f] = column_from_state(static_cast<unsigned>((key >> shift_of(f)) & kFileMask));
  return PawnClass(cols);
}

ClassKey encoding_to_key(const ClassEncoding& bytes) {
  auto c = canonical_decode(bytes);
  if (!c) throw ContractViolation("invalid class encoding");
  return pack(*c);
}

ClassEncoding key_to_encoding(ClassKey key) noexcept { return canonical_encode(unpack(key)); }

ClassKey color_swapped(ClassKey key) noexcept {
  ClassKey out = 0;
  for (int f = 0; f < 8; ++f) {
    const int s = shift_of(f);
    out |= ClassKey{kSwapState[(key >> s) & kFileMask]} << s;
  }
  return out;
}

ExactCount binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  ExactCount r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial does not fit 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace chessbound
