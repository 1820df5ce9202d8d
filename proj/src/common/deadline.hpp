#pragma once

#include <chrono>
#include <optional>

namespace aligator {

// Cooperative cancellation. A ScopedDeadline installs a per-thread time limit;
// long-running loops (Buchberger, fixed-point rounds) call check_deadline(),
// which throws Error{ErrorKind::Timeout} once the limit has passed.
class ScopedDeadline {
public:
    explicit ScopedDeadline(std::optional<std::chrono::duration<double>> budget);
    ~ScopedDeadline();

    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
    std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace aligator
