// Exercises the shared library through its C interface only.
#include "aligator/aligator.h"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

const char* kTwoBranch =
    "while true\n"
    "  if true\n"
    "    r = r - v; v = v + 2\n"
    "  else\n"
    "    r = r + u; u = u + 2\n"
    "  end\n"
    "end\n";

struct Report {
    aligator_status status;
    aligator_report* handle = nullptr;

    explicit Report(const char* source, aligator_options opts = aligator_options_default()) {
        status = aligator_analyze(source, &opts, &handle);
    }
    ~Report() { aligator_report_free(handle); }

    std::vector<std::string> basis() const {
        std::vector<std::string> out;
        for (size_t i = 0; i < aligator_report_basis_count(handle); ++i) out.emplace_back(aligator_report_basis(handle, i));
        return out;
    }
    std::string first_code() const {
        REQUIRE(aligator_report_diagnostic_count(handle) > 0);
        return aligator_report_diagnostic_code(handle, 0);
    }
};

aligator_options quiet() {
    aligator_options o = aligator_options_default();
    o.omit_timings = 1;
    return o;
}

}  // namespace

TEST_CASE("defaults and names") {
    aligator_options o = aligator_options_default();
    CHECK(o.trials == 100);
    CHECK(o.max_steps == 30);
    CHECK(o.timeout_seconds == 60);
    CHECK(std::string(aligator_version()).size() > 0);
    CHECK(std::string(aligator_status_name(ALIGATOR_OK)) == "ok");
    CHECK(std::string(aligator_status_name(ALIGATOR_SYNTAX_ERROR)) != std::string(aligator_status_name(ALIGATOR_TIMEOUT)));
}

TEST_CASE("two-branch loop through the C interface") {
    Report r(kTwoBranch);
    REQUIRE(r.status == ALIGATOR_OK);
    CHECK(r.basis() == std::vector<std::string>{"v_0^2-u_0^2-v^2+u^2+4*r_0-2*v_0+2*u_0-4*r+2*v-2*u"});
    CHECK(aligator_report_trivial_ideal(r.handle) == 0);
    CHECK(aligator_report_status(r.handle) == ALIGATOR_OK);
}

TEST_CASE("trivial loops") {
    Report counting("while true x = x + 1 end");
    REQUIRE(counting.status == ALIGATOR_OK);
    CHECK(counting.basis().empty());
    CHECK(aligator_report_trivial_ideal(counting.handle) == 1);

    Report identity("while true x = x end");
    REQUIRE(identity.status == ALIGATOR_OK);
    // Same term order as every other basis: initial values first.
    CHECK(identity.basis() == std::vector<std::string>{"x_0-x"});
}

TEST_CASE("error statuses and diagnostics") {
    Report syntax("while true x = end");
    CHECK(syntax.status == ALIGATOR_SYNTAX_ERROR);
    CHECK(syntax.first_code() == "SyntaxError");

    Report product("while true x = x*y; y = y + 1 end");
    CHECK(product.status == ALIGATOR_UNSUPPORTED);
    CHECK(product.first_code() == "UnsupportedUpdate");

    Report nested("while true while true x = x + 1 end end");
    CHECK(nested.status == ALIGATOR_UNSUPPORTED);
    CHECK(nested.first_code() == "NestedWhile");

    Report fib("while true t = x; x = x + y; y = t end");
    CHECK(fib.status == ALIGATOR_UNSUPPORTED);

    Report irrational("while true x = x + y; y = x - y end");
    CHECK(irrational.status == ALIGATOR_UNSUPPORTED);
    CHECK(irrational.first_code() == "IrrationalRoots");

    aligator_report* none = nullptr;
    CHECK(aligator_analyze(nullptr, nullptr, &none) == ALIGATOR_INVALID_ARGUMENT);
    CHECK(none == nullptr);
    aligator_options bad = aligator_options_default();
    bad.trials = -1;
    CHECK(aligator_analyze("while true x = x end", &bad, &none) == ALIGATOR_INVALID_ARGUMENT);
}

TEST_CASE("an exhausted time budget reports a timeout") {
    aligator_options o = aligator_options_default();
    o.timeout_seconds = 1e-9;
    Report r(kTwoBranch, o);
    CHECK(r.status == ALIGATOR_TIMEOUT);
    CHECK(r.first_code() == "Timeout");
}

TEST_CASE("JSON report shape and determinism") {
    aligator_options o = quiet();
    o.verify = 1;
    o.seed = 7;
    Report a(kTwoBranch, o), b(kTwoBranch, o);
    REQUIRE(a.status == ALIGATOR_OK);
    std::string ja = aligator_report_json(a.handle), jb = aligator_report_json(b.handle);
    CHECK(ja == jb);

    auto j = nlohmann::json::parse(ja);
    for (const char* key : {"variables", "initial_variables", "paths", "closed_forms", "invariant_basis",
                            "trivial_ideal", "diagnostics", "verification"}) {
        CHECK_MESSAGE(j.contains(key), key);
    }
    CHECK_FALSE(j.contains("timings_ms"));
    CHECK(j["paths"] == 2);
    CHECK(j["variables"] == nlohmann::json::array({"r", "v", "u"}));
    CHECK(j["initial_variables"] == nlohmann::json::array({"r_0", "v_0", "u_0"}));
    CHECK(j["verification"]["passed"] == true);
    CHECK(j["verification"]["trials"] == 100);
    CHECK(j["verification"]["max_steps"] == 30);

    Report timed(kTwoBranch);
    auto jt = nlohmann::json::parse(aligator_report_json(timed.handle));
    for (const char* phase : {"parse", "extract", "solve", "invariants"}) CHECK(jt["timings_ms"].contains(phase));
}

TEST_CASE("verify through the C interface") {
    const char* good[] = {"v_0^2-u_0^2-v^2+u^2+4*r_0-2*v_0+2*u_0-4*r+2*v-2*u"};
    int passed = -1;
    char* cex = nullptr;
    CHECK(aligator_verify(kTwoBranch, good, 1, 100, 30, 0, &passed, &cex) == ALIGATOR_OK);
    CHECK(passed == 1);
    CHECK(cex == nullptr);

    const char* corrupted[] = {"v_0^2-u_0^2-v^2+u^2+4*r_0-2*v_0+2*u_0-4*r+2*v-2*u+1"};
    CHECK(aligator_verify(kTwoBranch, corrupted, 1, 10, 30, 0, &passed, &cex) == ALIGATOR_OK);
    CHECK(passed == 0);
    REQUIRE(cex != nullptr);
    auto j = nlohmann::json::parse(cex);
    CHECK(j["step"] == 0);
    aligator_string_free(cex);

    CHECK(aligator_verify(kTwoBranch, nullptr, 0, 10, 10, 0, &passed, nullptr) == ALIGATOR_OK);
    CHECK(passed == 1);
}

TEST_CASE("bench over directories") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "aligator_capi_bench";
    fs::remove_all(dir);
    fs::create_directories(dir);

    aligator_options o = quiet();
    aligator_bench* b = nullptr;
    REQUIRE(aligator_bench_run(dir.c_str(), &o, 1, &b) == ALIGATOR_OK);
    CHECK(aligator_bench_count(b) == 0);
    CHECK(aligator_bench_all_passed(b) == 1);
    aligator_bench_free(b);

    std::ofstream(dir / "two.loop") << kTwoBranch;
    std::ofstream(dir / "bad.loop") << "while true x = x*y end";
    std::ofstream(dir / "ignored.txt") << "not a loop";
    o.verify = 1;
    REQUIRE(aligator_bench_run(dir.c_str(), &o, 2, &b) == ALIGATOR_OK);
    CHECK(aligator_bench_count(b) == 2);
    CHECK(aligator_bench_all_passed(b) == 0);
    auto j = nlohmann::json::parse(aligator_bench_json(b));
    REQUIRE(j["instances"].size() == 2);
    CHECK(j["instances"][0]["instance"] == "bad");
    CHECK(j["instances"][1]["instance"] == "two");
    CHECK(j["instances"][1]["nonempty"] == true);
    CHECK(std::string(aligator_bench_csv(b)).find("two,") != std::string::npos);
    aligator_bench_free(b);

    CHECK(aligator_bench_run((dir / "missing").c_str(), &o, 1, &b) == ALIGATOR_IO_ERROR);
    fs::remove_all(dir);
}
