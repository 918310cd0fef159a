#pragma once

#include <chrono>
#include <optional>

namespace polyhole {

/// Process-wide soft time budget (POLYHOLE_BUDGET_MS). Long-running loops call
/// check_soft_deadline() at coarse points; exceeding the deadline throws
/// budget_exceeded, which the CLI maps to exit code 3.
void set_soft_deadline_ms(long long ms);
void clear_soft_deadline();
void check_soft_deadline();

}  // namespace polyhole
