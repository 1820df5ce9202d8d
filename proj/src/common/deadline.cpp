#include "common/deadline.hpp"

#include "common/error.hpp"

namespace aligator {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> tl_deadline;
}

ScopedDeadline::ScopedDeadline(std::optional<std::chrono::duration<double>> budget) : previous_(tl_deadline) {
    if (budget) {
        auto limit = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(*budget);
        if (!tl_deadline || limit < *tl_deadline) tl_deadline = limit;
    }
}

ScopedDeadline::~ScopedDeadline() { tl_deadline = previous_; }

void check_deadline() {
    if (tl_deadline && std::chrono::steady_clock::now() > *tl_deadline) {
        throw Error(ErrorKind::Timeout, diag::kTimeout, "time budget exhausted");
    }
}

}  // namespace aligator
