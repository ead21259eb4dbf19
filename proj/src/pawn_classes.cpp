#include "chessbound/pawn_classes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <thread>

#include "capture_kernel.hpp"
#include "chessbound/class_cache.hpp"

namespace chessbound {

namespace fs = std::filesystem;

namespace {

// Open-addressing set of class keys. Keys use at most 56 bits, so an all-ones
// word marks an empty slot.
class KeySet {
 public:
  explicit KeySet(std::size_t expected) {
    std::size_t cap = 1024;
    while (cap * kMaxLoadNum < expected * kMaxLoadDen) cap <<= 1;
    rehash(cap);
  }

  void insert(ClassKey key) {
    std::size_t i = slot_of(key);
    for (;;) {
      const ClassKey k = slots_[i];
      if (k == key) return;
      if (k == kEmpty) break;
      i = (i + 1) & mask_;
    }
    slots_[i] = key;
    if (++size_ * kMaxLoadDen > slots_.size() * kMaxLoadNum) rehash(slots_.size() * 2);
  }

  std::size_t size() const noexcept { return size_; }

  std::vector<ClassKey> take_sorted() && {
    auto out = std::move(slots_);
    out.erase(std::remove(out.begin(), out.end(), kEmpty), out.end());
    out.shrink_to_fit();
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr ClassKey kEmpty = ~ClassKey{0};
  static constexpr std::size_t kMaxLoadNum = 7;
  static constexpr std::size_t kMaxLoadDen = 10;

  std::size_t slot_of(ClassKey key) const noexcept {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> shift_);
  }

  void rehash(std::size_t capacity) {
    std::vector<ClassKey> old = std::move(slots_);
    slots_.assign(capacity, kEmpty);
    mask_ = capacity - 1;
    shift_ = 64 - std::countr_zero(capacity);
    for (ClassKey k : old) {
      if (k == kEmpty) continue;
      std::size_t i = slot_of(k);
      while (slots_[i] != kEmpty) i = (i + 1) & mask_;
      slots_[i] = k;
    }
  }

  std::vector<ClassKey> slots_;
  std::size_t size_ = 0;
  std::size_t mask_ = 0;
  int shift_ = 64;
};

ExactCount to_exact(unsigned __int128 v) {
  ExactCount hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

ExactCount sum_positions(std::span<const ClassKey> keys) {
  unsigned __int128 total = 0;
  for (ClassKey k : keys) total += detail::position_count(k);
  return to_exact(total);
}

std::vector<PawnClass> sorted_classes(KeySet&& set) {
  std::vector<PawnClass> out;
  for (ClassKey k : std::move(set).take_sorted()) out.push_back(unpack(k));
  return out;
}

bool pawn_capturer_possible(const GraphEdge& edge) {
  return edge.to.pawns(edge.capturer_color()) >= 1;
}

template <class Emit>
void for_each_edge_class(ClassKey key, const GraphEdge& edge, Emit&& emit) {
  detail::for_each_capture(key, {edge.captured_color, edge.captured_nature, Nature::piece}, emit);
  if (pawn_capturer_possible(edge))
    detail::for_each_capture(key, {edge.captured_color, edge.captured_nature, Nature::pawn}, emit);
}

}  // namespace

PawnClass start_class() {
  std::array<Column, 8> cols;
  cols.fill(Column{2, 0b10});
  return PawnClass(cols);
}

ExactCount class_position_count(const PawnClass& c) {
  ExactCount r = 1;
  for (const auto& col : c.columns()) r *= binomial(6, col.length);
  return r;
}

std::vector<PawnClass> apply_capture(const PawnClass& c, const CaptureEvent& e) {
  if (!c.valid()) throw ContractViolation("invalid pawn class");
  KeySet set(64);
  detail::for_each_capture(pack(c), e, [&](ClassKey k) { set.insert(k); });
  return sorted_classes(std::move(set));
}

std::vector<PawnClass> edge_classes(const PawnClass& c, const GraphEdge& edge) {
  if (!c.valid()) throw ContractViolation("invalid pawn class");
  KeySet set(64);
  for_each_edge_class(pack(c), edge, [&](ClassKey k) { set.insert(k); });
  return sorted_classes(std::move(set));
}

ClassEngine::ClassEngine(EngineOptions options) : options_(std::move(options)) {
  if (options_.workers == 0) options_.workers = 1;
}

fs::path ClassEngine::cache_path(const Quadruplet& canonical) const {
  return options_.cache_dir / class_file_name(canonical);
}

void ClassEngine::check_scope(const Quadruplet& q) const {
  require_valid(q);
  if (q.men() < kLowestMen)
    throw ContractViolation("class enumeration covers 25 men or more, got " + to_string(q));
}

ClassSet ClassEngine::quadruplet_classes(const Quadruplet& q) {
  check_scope(q);
  const auto [canonical, swapped] = canonical_symmetry(q);
  ensure(canonical);
  ClassSet set{q, read_class_file(cache_path(canonical))};
  if (swapped) {
    for (auto& k : set.keys) k = color_swapped(k);
    std::sort(set.keys.begin(), set.keys.end());
  }
  return set;
}

ExactCount ClassEngine::pawn_bound(const Quadruplet& q) { return summary(q).pawn_bound; }

ClassSummary ClassEngine::summary(const Quadruplet& q) {
  check_scope(q);
  ClassSummary s = ensure(canonical_symmetry(q).first);
  s.quadruplet = q;
  return s;
}

void ClassEngine::build_layers_down_to(int men) {
  if (men < kLowestMen || men > 32) throw ContractViolation("layer out of range");
  for (int layer = 32; layer >= men; --layer) {
    std::vector<Quadruplet> todo;
    for (const auto& q : quadruplets_with_men(layer))
      if (!canonical_symmetry(q).second) todo.push_back(q);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
        try {
          ensure(todo[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    const unsigned n = std::min<unsigned>(options_.workers, static_cast<unsigned>(todo.size()));
    if (n <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
  }
}

const ClassSummary& ClassEngine::ensure(const Quadruplet& canonical) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = summaries_.find(canonical); it != summaries_.end()) return it->second;
  }
  ClassSummary s = load_or_build(canonical);
  std::lock_guard lock(mutex_);
  return summaries_.try_emplace(canonical, std::move(s)).first->second;
}

ClassSummary ClassEngine::load_or_build(const Quadruplet& canonical) {
  if (fs::exists(cache_path(canonical))) return summarize_file(canonical);
  for (const auto& edge : predecessors(canonical)) ensure(canonical_symmetry(edge.from).first);
  return build(canonical);
}

ClassSummary ClassEngine::summarize_file(const Quadruplet& canonical) {
  unsigned __int128 total = 0;
  const auto header = stream_class_file(cache_path(canonical), [&](std::span<const ClassKey> keys) {
    for (ClassKey k : keys) total += detail::position_count(k);
  });
  if (header.quadruplet != canonical)
    throw CacheError(cache_path(canonical).string() + ": header names " +
                     to_string(header.quadruplet));
  return {canonical, header.count, to_exact(total), 0.0};
}

ClassSummary ClassEngine::build(const Quadruplet& canonical) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<ClassKey> keys;

  if (canonical == kRootQuadruplet) {
    keys.push_back(pack(start_class()));
  } else {
    const auto edges = predecessors(canonical);
    std::size_t expected = 0;
    for (const auto& edge : edges) expected += ensure(canonical_symmetry(edge.from).first).classes;

    KeySet set(expected);
    auto insert = [&](ClassKey k) { set.insert(k); };
    for (const auto& edge : edges) {
      const auto [source, swapped] = canonical_symmetry(edge.from);
      stream_class_file(cache_path(source), [&](std::span<const ClassKey> chunk) {
        for (ClassKey k : chunk) for_each_edge_class(swapped ? color_swapped(k) : k, edge, insert);
      });
    }
    keys = std::move(set).take_sorted();
  }

  write_class_file(cache_path(canonical), canonical, keys);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  return {canonical, keys.size(), sum_positions(keys), elapsed.count()};
}

}  // namespace chessbound
