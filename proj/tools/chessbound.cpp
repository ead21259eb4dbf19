// Command-line front end for the diagram upper-bound engine.

#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chessbound/pawn_classes.hpp"
#include "chessbound/report.hpp"
#include "chessbound/sparse_board.hpp"
#include "verify.hpp"

using namespace chessbound;

namespace {

std::string render_ftable(const FTable& f, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::json: {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (int k = 0; k <= FTable::kMaxInA; ++k) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int bw = 0; bw < 3; ++bw) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (int bb = 0; bb < 3; ++bb) row.push_back(f(k, bw, bb).str());
          rows.push_back(row);
        }
        j.push_back(rows);
      }
      os << j.dump() << '\n';
      break;
    }
    case ReportFormat::csv:
      for (int k = 0; k <= FTable::kMaxInA; ++k)
        for (int bw = 0; bw < 3; ++bw)
          for (int bb = 0; bb < 3; ++bb)
            os << k << ',' << bw << ',' << bb << ',' << f(k, bw, bb).str() << '\n';
      break;
    case ReportFormat::table:
      for (int k = 0; k <= FTable::kMaxInA; ++k) {
        os << "f_" << k << "(b_w, b_b)\n";
        for (int bw = 0; bw < 3; ++bw) {
          os << "  " << bw;
          for (int bb = 0; bb < 3; ++bb) os << std::setw(14) << f(k, bw, bb).str();
          os << '\n';
        }
      }
      break;
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bound on the number of chess diagrams without promotion"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir = "class-cache";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string format_name = "table";
  int lowest_men = 2;
  app.add_option("--cache-dir", cache_dir, "Directory holding class files")->capture_default_str();
  app.add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--max-men", lowest_men,
                 "Deepest men count to descend to; rows below it are skipped")
      ->check(CLI::Range(2, 32));

  auto* total_cmd = app.add_subcommand("total", "Full bound, 32 men down to --max-men");
  int men_arg = 0;
  auto* men_cmd = app.add_subcommand("men", "Bound for one men count");
  men_cmd->add_option("m", men_arg, "Men on the board")->required()->check(CLI::Range(2, 32));
  std::vector<int> quad_args;
  auto* quad_cmd = app.add_subcommand("quad", "Classes, n_P, m_P and bound of one quadruplet");
  quad_cmd->add_option("counts", quad_args, "Pw Pb pw pb")->required()->expected(4);
  bool brute_force = false;
  auto* ftable_cmd = app.add_subcommand("ftable", "Kings-and-bishops table");
  ftable_cmd->add_flag("--brute-force", brute_force, "Recompute by enumeration and compare");
  bool slow = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle cross-checks");
  verify_cmd->add_flag("--slow", slow, "Include the (7,7,7,7) class count");

  CLI11_PARSE(app, argc, argv);

  try {
    const ReportFormat format = parse_format(format_name);
    ClassEngine engine({cache_dir, workers});

    if (*total_cmd) {
      std::cout << render(total_bound(engine, {lowest_men, 32}), format);
    } else if (*men_cmd) {
      std::cout << render(total_bound(engine, {men_arg, men_arg}), format);
    } else if (*quad_cmd) {
      const Quadruplet q{quad_args[0], quad_args[1], quad_args[2], quad_args[3]};
      std::cout << render(quadruplet_report(engine, q), format);
    } else if (*ftable_cmd) {
      if (!brute_force) {
        std::cout << render_ftable(f_table(), format);
      } else {
        const FTable computed = f_table_bruteforce(workers);
        std::cout << render_ftable(computed, format);
        const bool same = computed == f_table();
        std::cerr << (same ? "brute force matches the published table\n"
                           : "brute force DIFFERS from the published table\n");
        return same ? 0 : 1;
      }
    } else if (*verify_cmd) {
      return run_verification(engine, std::cout, slow) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
