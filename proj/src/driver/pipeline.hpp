#pragma once

#include "common/error.hpp"
#include "driver/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aligator {

enum class Status { Ok, Syntax, Unsupported, Timeout, NonTermination, VerificationFailed, Internal };

// Process exit code of the command-line tool for each status.
int exit_code(Status s);
const char* status_name(Status s);
Status status_of(ErrorKind kind);

struct RunOptions {
    bool verify = false;
    int trials = 100;
    int max_steps = 30;
    std::uint64_t seed = 0;
    std::optional<double> timeout_seconds = 60.0;
    int max_rounds = 50;
};

struct Timings {
    double parse = 0, extract = 0, solve = 0, invariants = 0;  // milliseconds
};

struct Report {
    Status status = Status::Ok;
    std::string source;
    std::vector<std::string> variables;
    std::vector<std::string> initial_variables;
    std::size_t paths = 0;
    std::vector<std::vector<std::string>> recurrences;   // per path
    std::vector<std::vector<std::string>> closed_forms;  // per path
    std::vector<std::string> invariant_basis;
    bool trivial_ideal = false;  // the invariant ideal is zero
    int rounds = 0;
    std::vector<Diagnostic> diagnostics;
    Timings timings;
    std::optional<Verification> verification;
};

// parse -> flatten -> recurrences -> closed forms -> path ideals -> fixed point.
// Errors are reported in the returned value, never thrown.
Report run(std::string_view source, const RunOptions& options = {});

std::string report_json(const Report& report, bool include_timings = true);
std::string report_text(const Report& report);

}  // namespace aligator
