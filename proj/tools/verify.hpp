#pragma once

#include <ostream>

#include "chessbound/pawn_classes.hpp"

namespace chessbound {

/// Runs the oracle cross-checks, printing one PASS/FAIL line each.
bool run_verification(ClassEngine& engine, std::ostream& out, bool slow);

}  // namespace chessbound
