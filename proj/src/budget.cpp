#include "polyhole/budget.hpp"

#include <atomic>

#include "polyhole/errors.hpp"

namespace polyhole {

namespace {
std::atomic<long long> g_deadline_ns{0};  // 0 = no deadline
}

void set_soft_deadline_ms(long long ms) {
    auto now = std::chrono::steady_clock::now().time_since_epoch();
    g_deadline_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(now).count() + ms * 1000000;
}

void clear_soft_deadline() { g_deadline_ns = 0; }

void check_soft_deadline() {
    long long deadline = g_deadline_ns.load(std::memory_order_relaxed);
    if (deadline == 0) return;
    auto now = std::chrono::steady_clock::now().time_since_epoch();
    if (std::chrono::duration_cast<std::chrono::nanoseconds>(now).count() > deadline)
        throw budget_exceeded("soft time budget exceeded (POLYHOLE_BUDGET_MS)");
}

}  // namespace polyhole
