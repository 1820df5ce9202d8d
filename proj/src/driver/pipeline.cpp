#include "driver/pipeline.hpp"

#include "common/deadline.hpp"
#include "frontend/flatten.hpp"
#include "frontend/parser.hpp"
#include "invariants/invariants.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>

namespace aligator {

int exit_code(Status s) {
    switch (s) {
        case Status::Ok: return 0;
        case Status::Syntax: return 1;
        case Status::Unsupported: return 2;
        case Status::Timeout: return 3;
        case Status::NonTermination: return 4;
        case Status::VerificationFailed: return 8;
        case Status::Internal: return 7;
    }
    return 7;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::Syntax: return "syntax-error";
        case Status::Unsupported: return "unsupported";
        case Status::Timeout: return "timeout";
        case Status::NonTermination: return "non-termination";
        case Status::VerificationFailed: return "verification-failed";
        case Status::Internal: return "internal-error";
    }
    return "internal-error";
}

Status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Syntax: return Status::Syntax;
        case ErrorKind::Unsupported: return Status::Unsupported;
        case ErrorKind::Timeout: return Status::Timeout;
        case ErrorKind::NonTermination: return Status::NonTermination;
        case ErrorKind::Structural: return Status::Internal;
    }
    return Status::Internal;
}

namespace {

class Stopwatch {
public:
    double lap() {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

Report run(std::string_view source, const RunOptions& options) {
    Report r;
    r.source = std::string(source);
    Stopwatch clock;
    try {
        std::optional<std::chrono::duration<double>> budget;
        if (options.timeout_seconds) budget = std::chrono::duration<double>(*options.timeout_seconds);
        ScopedDeadline deadline(budget);

        frontend::LoopAst ast = frontend::parse(source);
        frontend::PathSystem ps = frontend::flatten(ast);
        r.variables = ps.variables;
        for (const auto& v : ps.variables) r.initial_variables.push_back(v + "_0");
        r.paths = ps.paths.size();
        r.timings.parse = clock.lap();

        std::vector<RecurrenceSystem> systems = extract_all(ps);
        for (const auto& s : systems) r.recurrences.push_back(s.render());
        r.timings.extract = clock.lap();

        std::vector<ClosedFormSystem> forms;
        for (const auto& s : systems) {
            forms.push_back(closed_forms(s));
            r.closed_forms.push_back(forms.back().render());
        }
        r.timings.solve = clock.lap();

        UniversePtr state = state_universe(ps.variables);
        FixedPointResult fixed = invariant_ideal(forms, state, options.max_rounds);
        r.rounds = fixed.rounds;
        std::vector<MultiPoly> basis;
        for (const auto& g : fixed.ideal.generators()) {
            basis.push_back(g.primitive());
            r.invariant_basis.push_back(to_string(basis.back()));
        }
        r.trivial_ideal = basis.empty();
        r.timings.invariants = clock.lap();

        if (options.verify) {
            r.verification = verify_numeric(ast, basis, options.trials, options.max_steps, options.seed);
            if (!r.verification->passed) {
                r.status = Status::VerificationFailed;
                const Counterexample& c = *r.verification->counterexample;
                r.diagnostics.push_back({diag::kVerificationFailed, "invariant " + c.polynomial +
                                                                        " does not vanish after " +
                                                                        std::to_string(c.step) + " iterations"});
            }
        }
    } catch (const Error& e) {
        r.status = status_of(e.kind());
        r.diagnostics.insert(r.diagnostics.end(), e.diagnostics().begin(), e.diagnostics().end());
    } catch (const std::exception& e) {
        r.status = Status::Internal;
        r.diagnostics.push_back({diag::kInternal, e.what()});
    }
    return r;
}

namespace {

double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

}  // namespace

std::string report_json(const Report& r, bool include_timings) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["status"] = status_name(r.status);
    j["variables"] = r.variables;
    j["initial_variables"] = r.initial_variables;
    j["paths"] = r.paths;
    j["recurrences"] = r.recurrences;
    j["closed_forms"] = r.closed_forms;
    j["invariant_basis"] = r.invariant_basis;
    j["trivial_ideal"] = r.trivial_ideal;
    j["rounds"] = r.rounds;
    j["diagnostics"] = ordered_json::array();
    for (const auto& d : r.diagnostics) j["diagnostics"].push_back({{"code", d.code}, {"message", d.message}});
    if (include_timings) {
        j["timings_ms"] = {{"parse", round_ms(r.timings.parse)},
                           {"extract", round_ms(r.timings.extract)},
                           {"solve", round_ms(r.timings.solve)},
                           {"invariants", round_ms(r.timings.invariants)}};
    }
    if (r.verification) {
        const Verification& v = *r.verification;
        ordered_json vj = {{"trials", v.trials}, {"max_steps", v.max_steps}, {"passed", v.passed}};
        if (v.counterexample) {
            const Counterexample& c = *v.counterexample;
            ordered_json init = ordered_json::object();
            for (const auto& [name, value] : c.initials) init[name] = to_string(value);
            vj["counterexample"] = {
                {"initials", init}, {"branches", c.branches}, {"step", c.step}, {"polynomial", c.polynomial}};
        }
        j["verification"] = vj;
    }
    return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
    std::string out;
    auto join = [](const std::vector<std::string>& xs) {
        std::string s;
        for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
        return s;
    };
    out += "status: " + std::string(status_name(r.status)) + "\n";
    if (!r.variables.empty()) out += "variables: " + join(r.variables) + "\n";
    if (r.paths > 0) out += "paths: " + std::to_string(r.paths) + "\n";
    for (std::size_t p = 0; p < r.closed_forms.size(); ++p) {
        out += "closed forms, path " + std::to_string(p + 1) + ":\n";
        for (const auto& f : r.closed_forms[p]) out += "  " + f + "\n";
    }
    if (r.status == Status::Ok || r.status == Status::VerificationFailed) {
        out += "invariant basis";
        if (r.trivial_ideal) {
            out += ": none (zero ideal)\n";
        } else {
            out += ":\n";
            for (const auto& g : r.invariant_basis) out += "  " + g + "\n";
        }
    }
    if (r.verification) {
        out += "verification: " + std::string(r.verification->passed ? "passed" : "FAILED") + " (" +
               std::to_string(r.verification->trials) + " trials, " + std::to_string(r.verification->max_steps) +
               " steps)\n";
    }
    for (const auto& d : r.diagnostics) out += "error[" + d.code + "]: " + d.message + "\n";
    return out;
}

}  // namespace aligator
