// Command-line front end; talks to the library only through the C interface.
#include "aligator/aligator.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

bool read_source(const std::string& path, std::string& out) {
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial loop invariant generator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(aligator_version()));

    aligator_options opts = aligator_options_default();
    std::string input, format = "text";
    bool verify = false, omit_timings = false;
    double timeout = 60;

    auto* analyze = app.add_subcommand("analyze", "Compute the polynomial invariant ideal of a loop");
    analyze->add_option("file", input, "Loop source file, or - for standard input")->required();
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    analyze->add_flag("--verify", verify, "Check the invariants on random executions");
    analyze->add_option("--trials", opts.trials, "Random initial states for --verify")->check(CLI::NonNegativeNumber);
    analyze->add_option("--steps", opts.max_steps, "Iterations per trial for --verify")->check(CLI::NonNegativeNumber);
    analyze->add_option("--seed", opts.seed, "Random seed for --verify");
    analyze->add_option("--timeout", timeout, "Time limit in seconds (0 disables)")->check(CLI::NonNegativeNumber);
    analyze->add_flag("--omit-timings", omit_timings, "Leave phase timings out of the JSON report");

    std::string dir, bench_format = "text";
    int jobs = 1;
    bool bench_verify = true;
    auto* bench = app.add_subcommand("bench", "Analyze and verify every .loop file of a directory");
    bench->add_option("dir", dir, "Corpus directory")->required();
    bench->add_option("--format", bench_format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    bench->add_option("--timeout", timeout, "Per-instance time limit in seconds (0 disables)")
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
    bench->add_option("--trials", opts.trials, "Random initial states per instance")->check(CLI::NonNegativeNumber);
    bench->add_option("--steps", opts.max_steps, "Iterations per trial")->check(CLI::NonNegativeNumber);
    bench->add_option("--seed", opts.seed, "Random seed");
    bench->add_flag("!--no-verify", bench_verify, "Skip the randomized execution check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ALIGATOR_INVALID_ARGUMENT;
    }
    opts.timeout_seconds = timeout;

    if (*analyze) {
        std::string source;
        if (!read_source(input, source)) {
            std::cerr << "error: cannot read '" << input << "'\n";
            return ALIGATOR_IO_ERROR;
        }
        opts.verify = verify ? 1 : 0;
        opts.omit_timings = omit_timings ? 1 : 0;
        aligator_report* report = nullptr;
        aligator_status status = aligator_analyze(source.c_str(), &opts, &report);
        if (!report) {
            std::cerr << "error: " << aligator_status_name(status) << "\n";
            return status;
        }
        std::cout << (format == "json" ? aligator_report_json(report) : aligator_report_text(report));
        if (format == "json") {
            for (size_t i = 0; i < aligator_report_diagnostic_count(report); ++i) {
                std::cerr << "error[" << aligator_report_diagnostic_code(report, i)
                          << "]: " << aligator_report_diagnostic_message(report, i) << "\n";
            }
        }
        aligator_report_free(report);
        return status;
    }

    opts.verify = bench_verify ? 1 : 0;
    aligator_bench* result = nullptr;
    aligator_status status = aligator_bench_run(dir.c_str(), &opts, jobs, &result);
    if (status != ALIGATOR_OK) {
        std::cerr << "error: cannot run the corpus in '" << dir << "' (" << aligator_status_name(status) << ")\n";
        return status;
    }
    if (bench_format == "json") {
        std::cout << aligator_bench_json(result);
    } else if (bench_format == "csv") {
        std::cout << aligator_bench_csv(result);
    } else {
        std::cout << aligator_bench_text(result);
    }
    int code = aligator_bench_all_passed(result) ? 0 : 1;
    aligator_bench_free(result);
    return code;
}
