#pragma once

#include "driver/pipeline.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace aligator {

struct BenchOptions {
    RunOptions run{true, 100, 30, 0, 60.0, 50};
    int jobs = 1;
};

struct BenchRow {
    std::string name;  // file stem
    Status status = Status::Ok;
    double seconds = 0;
    std::size_t basis_size = 0;
    bool nonempty = false;
    std::optional<bool> verified;
    std::string diagnostic;  // first diagnostic code, if any

    bool passed() const { return status == Status::Ok && nonempty && verified.value_or(true); }
};

struct BenchResult {
    std::vector<BenchRow> rows;  // sorted by name

    bool all_passed() const;
};

// Analyzes every *.loop file of `dir`.
BenchResult bench(const std::filesystem::path& dir, const BenchOptions& options);

std::string bench_text(const BenchResult& result);
std::string bench_json(const BenchResult& result);
std::string bench_csv(const BenchResult& result);

}  // namespace aligator
