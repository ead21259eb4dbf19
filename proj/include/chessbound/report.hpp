#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chessbound/core_types.hpp"

namespace chessbound {

class ClassEngine;

struct QuadrupletRow {
  Quadruplet quadruplet;
  std::uint64_t classes = 0;
  ExactCount pawn_bound;    // n_P
  ExactCount piece_bound;   // m_P
  ExactCount diagram_bound; // n_P * m_P
  double build_seconds = 0.0;
};

struct BoundReport {
  /// Men count -> bound, iterated from 32 down.
  std::map<int, ExactCount, std::greater<>> by_men;
  std::vector<QuadrupletRow> by_quadruplet;
  ExactCount total = 0;
};

struct ReportRange {
  int lowest_men = 2;
  int highest_men = 32;
};

/// Computes the per-men rows in [range.lowest_men, range.highest_men]:
/// class enumeration for 25 men and more, the sparse-board count below.
BoundReport total_bound(ClassEngine& engine, ReportRange range = {});

/// One quadruplet (25 men or more) as a single-row report.
BoundReport quadruplet_report(ClassEngine& engine, const Quadruplet& q);

enum class ReportFormat { table, json, csv };

ReportFormat parse_format(std::string_view name);

std::string render(const BoundReport& report, ReportFormat format);

/// Scientific rendering with `digits` significant digits, rounding the
/// decimal expansion half to even, e.g. "3.8521e37".
std::string to_scientific(const ExactCount& value, int digits);

}  // namespace chessbound
