#include "driver/bench.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace aligator {

bool BenchResult::all_passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.passed(); });
}

BenchResult bench(const std::filesystem::path& dir, const BenchOptions& options) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error(ErrorKind::Structural, diag::kInvalidArgument, "not a directory: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".loop") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    BenchResult result;
    result.rows.resize(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i; (i = next++) < files.size();) {
            BenchRow& row = result.rows[i];
            row.name = files[i].stem().string();
            std::ifstream in(files[i]);
            std::stringstream buf;
            buf << in.rdbuf();
            auto start = std::chrono::steady_clock::now();
            Report report = run(buf.str(), options.run);
            row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            row.status = report.status;
            row.basis_size = report.invariant_basis.size();
            row.nonempty = !report.invariant_basis.empty();
            if (report.verification) row.verified = report.verification->passed;
            if (!report.diagnostics.empty()) row.diagnostic = report.diagnostics.front().code;
        }
    };
    int jobs = std::max(1, std::min<int>(options.jobs, int(files.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return result;
}

namespace {

std::string seconds_text(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

std::string verified_text(const BenchRow& r) {
    if (!r.verified) return "-";
    return *r.verified ? "yes" : "no";
}

}  // namespace

std::string bench_text(const BenchResult& result) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-12s %-20s %9s %6s %9s %9s\n", "instance", "status", "time(s)", "basis",
                  "nonempty", "verified");
    out << line;
    for (const auto& r : result.rows) {
        std::snprintf(line, sizeof line, "%-12s %-20s %9s %6zu %9s %9s\n", r.name.c_str(), status_name(r.status),
                      seconds_text(r.seconds).c_str(), r.basis_size, r.nonempty ? "yes" : "no", verified_text(r).c_str());
        out << line;
    }
    std::size_t passed = std::count_if(result.rows.begin(), result.rows.end(), [](const BenchRow& r) { return r.passed(); });
    out << passed << "/" << result.rows.size() << " instances passed\n";
    return out.str();
}

std::string bench_json(const BenchResult& result) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : result.rows) {
        nlohmann::ordered_json j = {{"instance", r.name},
                                    {"status", status_name(r.status)},
                                    {"seconds", std::stod(seconds_text(r.seconds))},
                                    {"basis_size", r.basis_size},
                                    {"nonempty", r.nonempty}};
        j["verified"] = r.verified ? nlohmann::ordered_json(*r.verified) : nlohmann::ordered_json(nullptr);
        j["diagnostic"] = r.diagnostic;
        j["passed"] = r.passed();
        rows.push_back(std::move(j));
    }
    nlohmann::ordered_json doc = {{"instances", rows}, {"all_passed", result.all_passed()}};
    return doc.dump(2) + "\n";
}

std::string bench_csv(const BenchResult& result) {
    std::string out = "instance,status,seconds,basis_size,nonempty,verified,diagnostic\n";
    for (const auto& r : result.rows) {
        out += r.name + "," + status_name(r.status) + "," + seconds_text(r.seconds) + "," + std::to_string(r.basis_size) +
               "," + (r.nonempty ? "true" : "false") + "," +
               (r.verified ? (*r.verified ? "true" : "false") : "") + "," + r.diagnostic + "\n";
    }
    return out;
}

}  // namespace aligator
