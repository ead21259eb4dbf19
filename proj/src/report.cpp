#include "chessbound/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chessbound/capture_graph.hpp"
#include "chessbound/pawn_classes.hpp"
#include "chessbound/piece_placement.hpp"
#include "chessbound/sparse_board.hpp"

namespace chessbound {

namespace {

QuadrupletRow make_row(ClassEngine& engine, const Quadruplet& q) {
  const ClassSummary s = engine.summary(q);
  QuadrupletRow row{q, s.classes, s.pawn_bound, piece_bound(q), 0, s.build_seconds};
  row.diagram_bound = row.pawn_bound * row.piece_bound;
  return row;
}

}  // namespace

BoundReport total_bound(ClassEngine& engine, ReportRange range) {
  if (range.lowest_men < 2 || range.highest_men > 32 || range.lowest_men > range.highest_men)
    throw ContractViolation("men range must satisfy 2 <= lowest <= highest <= 32");

  BoundReport report;
  const int deepest_layer = std::max(range.lowest_men, ClassEngine::kLowestMen);
  if (range.highest_men >= ClassEngine::kLowestMen) engine.build_layers_down_to(deepest_layer);

  for (int men = range.highest_men; men >= range.lowest_men; --men) {
    ExactCount bound = 0;
    if (men >= ClassEngine::kLowestMen) {
      for (const auto& q : quadruplets_with_men(men)) {
        report.by_quadruplet.push_back(make_row(engine, q));
        bound += report.by_quadruplet.back().diagram_bound;
      }
    } else {
      bound = sparse_bound(men);
    }
    report.total += bound;
    report.by_men.emplace(men, std::move(bound));
  }
  return report;
}

BoundReport quadruplet_report(ClassEngine& engine, const Quadruplet& q) {
  BoundReport report;
  report.by_quadruplet.push_back(make_row(engine, q));
  report.total = report.by_quadruplet.back().diagram_bound;
  return report;
}

ReportFormat parse_format(std::string_view name) {
  if (name == "table") return ReportFormat::table;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format: " + std::string(name));
}

std::string to_scientific(const ExactCount& value, int digits) {
  if (digits < 1) throw ContractViolation("need at least one significant digit");
  if (value < 0) throw ContractViolation("counts are non-negative");
  const std::string s = value.str();
  if (value == 0) return "0";

  int exponent = static_cast<int>(s.size()) - 1;
  std::string kept = s.substr(0, std::min<std::size_t>(s.size(), digits));
  if (s.size() > static_cast<std::size_t>(digits)) {
    const std::string rest = s.substr(digits);
    bool up = false;
    if (rest[0] > '5') {
      up = true;
    } else if (rest[0] == '5') {
      const bool exact_half = rest.find_first_not_of('0', 1) == std::string::npos;
      up = !exact_half || (kept.back() - '0') % 2 == 1;
    }
    if (up) {
      int i = static_cast<int>(kept.size()) - 1;
      while (i >= 0 && kept[i] == '9') kept[i--] = '0';
      if (i < 0) {
        kept.insert(kept.begin(), '1');
        kept.pop_back();
        ++exponent;
      } else {
        ++kept[i];
      }
    }
  }
  kept.resize(digits, '0');

  std::string out(1, kept[0]);
  if (digits > 1) out += '.' + kept.substr(1);
  return out + 'e' + std::to_string(exponent);
}

std::string render(const BoundReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      nlohmann::ordered_json j;
      j["total"] = report.total.str();
      j["by_men"] = nlohmann::ordered_json::array();
      for (const auto& [men, bound] : report.by_men)
        j["by_men"].push_back({{"men", men}, {"bound", bound.str()}});
      j["by_quadruplet"] = nlohmann::ordered_json::array();
      for (const auto& r : report.by_quadruplet) {
        const auto& q = r.quadruplet;
        j["by_quadruplet"].push_back(
            {{"q", {q.white_pieces, q.black_pieces, q.white_pawns, q.black_pawns}},
             {"classes", r.classes},
             {"n_p", r.pawn_bound.str()},
             {"m_p", r.piece_bound.str()}});
      }
      return j.dump() + "\n";
    }
    case ReportFormat::csv: {
      // men,exact bound,3-digit scientific
      std::ostringstream os;
      for (const auto& [men, bound] : report.by_men)
        os << men << ',' << bound.str() << ',' << to_scientific(bound, 3) << '\n';
      return os.str();
    }
    case ReportFormat::table: {
      std::ostringstream os;
      if (!report.by_quadruplet.empty()) {
        os << std::left << std::setw(12) << "quadruplet" << std::right << std::setw(10)
           << "classes" << std::setw(12) << "n_P" << std::setw(12) << "m_P" << std::setw(12)
           << "bound" << "  exact\n";
        for (const auto& r : report.by_quadruplet)
          os << std::left << std::setw(12) << to_string(r.quadruplet) << std::right
             << std::setw(10) << r.classes << std::setw(12) << to_scientific(r.pawn_bound, 3)
             << std::setw(12) << to_scientific(r.piece_bound, 3) << std::setw(12)
             << to_scientific(r.diagram_bound, 3) << "  " << r.diagram_bound.str() << '\n';
        os << '\n';
      }
      if (!report.by_men.empty()) {
        os << std::setw(4) << "men" << std::setw(12) << "bound" << "  exact\n";
        for (const auto& [men, bound] : report.by_men)
          os << std::setw(4) << men << std::setw(12) << to_scientific(bound, 3) << "  "
             << bound.str() << '\n';
        os << '\n';
      }
      os << "total " << to_scientific(report.total, 5) << "  " << report.total.str() << '\n';
      return os.str();
    }
  }
  throw ContractViolation("unhandled report format");
}

}  // namespace chessbound
