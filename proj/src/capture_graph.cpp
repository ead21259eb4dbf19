#include "chessbound/capture_graph.hpp"

#include <array>

namespace chessbound {

namespace {

struct Counter {
  int Quadruplet::*field;
  Color captured_color;
  Nature captured_nature;
};

constexpr std::array<Counter, 4> kCounters{{
    {&Quadruplet::white_pieces, Color::white, Nature::piece},
    {&Quadruplet::black_pieces, Color::black, Nature::piece},
    {&Quadruplet::white_pawns, Color::white, Nature::pawn},
    {&Quadruplet::black_pawns, Color::black, Nature::pawn},
}};

}  // namespace

std::vector<GraphEdge> predecessors(const Quadruplet& q) {
  require_valid(q);
  std::vector<GraphEdge> edges;
  for (const auto& c : kCounters) {
    Quadruplet from = q;
    ++(from.*c.field);
    if (from.valid()) edges.push_back({from, q, c.captured_color, c.captured_nature});
  }
  return edges;
}

std::vector<GraphEdge> successors(const Quadruplet& q) {
  require_valid(q);
  std::vector<GraphEdge> edges;
  for (const auto& c : kCounters) {
    Quadruplet to = q;
    --(to.*c.field);
    if (to.valid()) edges.push_back({q, to, c.captured_color, c.captured_nature});
  }
  return edges;
}

std::vector<Quadruplet> quadruplets_with_men(int men) {
  if (men < 2 || men > 32) throw ContractViolation("men count must lie in [2, 32]");
  std::vector<Quadruplet> out;
  for (int Pw = 8; Pw >= 1; --Pw)
    for (int Pb = 8; Pb >= 1; --Pb)
      for (int pw = 8; pw >= 0; --pw) {
        const int pb = men - Pw - Pb - pw;
        if (pb >= 0 && pb <= 8) out.push_back({Pw, Pb, pw, pb});
      }
  return out;
}

std::pair<Quadruplet, bool> canonical_symmetry(const Quadruplet& q) {
  const Quadruplet swapped = q.color_swapped();
  if (swapped < q) return {swapped, true};
  return {q, false};
}

}  // namespace chessbound
