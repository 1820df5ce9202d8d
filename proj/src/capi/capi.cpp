#include "aligator/aligator.h"

#include "driver/bench.hpp"
#include "driver/pipeline.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>

using namespace aligator;

struct aligator_report {
    Report report;
    std::string json;
    std::string text;
};

struct aligator_bench {
    BenchResult result;
    std::string text, json, csv;
};

namespace {

aligator_status to_c(Status s) { return static_cast<aligator_status>(exit_code(s)); }

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

RunOptions run_options(const aligator_options* o) {
    aligator_options d = o ? *o : aligator_options_default();
    RunOptions r;
    r.verify = d.verify != 0;
    r.trials = d.trials;
    r.max_steps = d.max_steps;
    r.seed = d.seed;
    if (d.timeout_seconds > 0) {
        r.timeout_seconds = d.timeout_seconds;
    } else {
        r.timeout_seconds.reset();
    }
    return r;
}

bool valid(const aligator_options* o) { return !o || (o->trials >= 0 && o->max_steps >= 0); }

}  // namespace

extern "C" {

aligator_options aligator_options_default(void) { return aligator_options{0, 100, 30, 0, 60.0, 0}; }

const char* aligator_version(void) { return "0.1.0"; }

const char* aligator_status_name(aligator_status status) {
    switch (status) {
        case ALIGATOR_OK: return "ok";
        case ALIGATOR_SYNTAX_ERROR: return "syntax-error";
        case ALIGATOR_UNSUPPORTED: return "unsupported";
        case ALIGATOR_TIMEOUT: return "timeout";
        case ALIGATOR_NONTERMINATION: return "non-termination";
        case ALIGATOR_IO_ERROR: return "io-error";
        case ALIGATOR_INVALID_ARGUMENT: return "invalid-argument";
        case ALIGATOR_INTERNAL_ERROR: return "internal-error";
        case ALIGATOR_VERIFICATION_FAILED: return "verification-failed";
    }
    return "unknown";
}

void aligator_string_free(char* s) { std::free(s); }

aligator_status aligator_analyze(const char* source, const aligator_options* options, aligator_report** out) {
    if (!source || !out || !valid(options)) return ALIGATOR_INVALID_ARGUMENT;
    *out = nullptr;
    try {
        auto* r = new aligator_report{run(source, run_options(options)), {}, {}};
        r->json = report_json(r->report, !(options && options->omit_timings));
        r->text = report_text(r->report);
        *out = r;
        return to_c(r->report.status);
    } catch (...) {
        return ALIGATOR_INTERNAL_ERROR;
    }
}

void aligator_report_free(aligator_report* report) { delete report; }

aligator_status aligator_report_status(const aligator_report* report) {
    return report ? to_c(report->report.status) : ALIGATOR_INVALID_ARGUMENT;
}

size_t aligator_report_basis_count(const aligator_report* report) {
    return report ? report->report.invariant_basis.size() : 0;
}

const char* aligator_report_basis(const aligator_report* report, size_t index) {
    if (!report || index >= report->report.invariant_basis.size()) return nullptr;
    return report->report.invariant_basis[index].c_str();
}

int aligator_report_trivial_ideal(const aligator_report* report) { return report && report->report.trivial_ideal; }

size_t aligator_report_diagnostic_count(const aligator_report* report) {
    return report ? report->report.diagnostics.size() : 0;
}

const char* aligator_report_diagnostic_code(const aligator_report* report, size_t index) {
    if (!report || index >= report->report.diagnostics.size()) return nullptr;
    return report->report.diagnostics[index].code.c_str();
}

const char* aligator_report_diagnostic_message(const aligator_report* report, size_t index) {
    if (!report || index >= report->report.diagnostics.size()) return nullptr;
    return report->report.diagnostics[index].message.c_str();
}

const char* aligator_report_json(const aligator_report* report) { return report ? report->json.c_str() : nullptr; }

const char* aligator_report_text(const aligator_report* report) { return report ? report->text.c_str() : nullptr; }

aligator_status aligator_verify(const char* source, const char* const* basis, size_t count, int trials, int max_steps,
                                uint64_t seed, int* passed, char** counterexample_json) {
    if (!source || !passed || (count > 0 && !basis) || trials < 0 || max_steps < 0) return ALIGATOR_INVALID_ARGUMENT;
    if (counterexample_json) *counterexample_json = nullptr;
    try {
        std::vector<std::string> polys(basis, basis + count);
        Verification v = verify_numeric(source, polys, trials, max_steps, seed);
        *passed = v.passed ? 1 : 0;
        if (!v.passed && counterexample_json) {
            const Counterexample& c = *v.counterexample;
            nlohmann::ordered_json init = nlohmann::ordered_json::object();
            for (const auto& [name, value] : c.initials) init[name] = to_string(value);
            nlohmann::ordered_json j = {
                {"initials", init}, {"branches", c.branches}, {"step", c.step}, {"polynomial", c.polynomial}};
            *counterexample_json = duplicate(j.dump());
        }
        return ALIGATOR_OK;
    } catch (const Error& e) {
        return to_c(status_of(e.kind()));
    } catch (...) {
        return ALIGATOR_INTERNAL_ERROR;
    }
}

aligator_status aligator_bench_run(const char* directory, const aligator_options* options, int jobs,
                                   aligator_bench** out) {
    if (!directory || !out || !valid(options)) return ALIGATOR_INVALID_ARGUMENT;
    *out = nullptr;
    try {
        BenchOptions bo;
        bo.run = run_options(options);
        bo.jobs = jobs > 0 ? jobs : 1;
        auto* b = new aligator_bench{bench(directory, bo), {}, {}, {}};
        b->text = bench_text(b->result);
        b->json = bench_json(b->result);
        b->csv = bench_csv(b->result);
        *out = b;
        return ALIGATOR_OK;
    } catch (const Error&) {
        return ALIGATOR_IO_ERROR;
    } catch (...) {
        return ALIGATOR_INTERNAL_ERROR;
    }
}

void aligator_bench_free(aligator_bench* bench) { delete bench; }

size_t aligator_bench_count(const aligator_bench* bench) { return bench ? bench->result.rows.size() : 0; }

int aligator_bench_all_passed(const aligator_bench* bench) { return bench && bench->result.all_passed(); }

const char* aligator_bench_text(const aligator_bench* bench) { return bench ? bench->text.c_str() : nullptr; }

const char* aligator_bench_json(const aligator_bench* bench) { return bench ? bench->json.c_str() : nullptr; }

const char* aligator_bench_csv(const aligator_bench* bench) { return bench ? bench->csv.c_str() : nullptr; }

}  // extern "C"
