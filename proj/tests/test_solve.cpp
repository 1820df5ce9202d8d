#include <doctest.h>

#include "test_util.hpp"

#include "common/error.hpp"
#include "frontend/parser.hpp"
#include "solve/solve.hpp"

#include <random>

using namespace aligator;
using aligator::testing::P;
using aligator::oracles::affine_system;
using aligator::oracles::matches_unrolling;

namespace {

std::vector<ClosedFormSystem> solve_source(const std::string& src) {
    std::vector<ClosedFormSystem> out;
    for (const auto& sys : extract_all(frontend::flatten(frontend::parse(src)))) out.push_back(closed_forms(sys));
    return out;
}

UniversePtr counter_universe(std::initializer_list<const char*> initials) {
    std::vector<VarId> vars{VarId{"n1", VarKind::Counter}};
    for (const char* v : initials) vars.push_back(initial_var(v));
    return make_universe(std::move(vars));
}

}  // namespace

TEST_CASE("closed forms of the two-branch loop") {
    auto cfs = solve_source("while true if true r = r - v; v = v + 2 else r = r + u; u = u + 2 end end");
    REQUIRE(cfs.size() == 2);
    CHECK(cfs[0].render() ==
          std::vector<std::string>{"r(n1) = -n1^2-n1*(v(0)-1)+r(0)", "v(n1) = 2*n1+v(0)", "u(n1) = u(0)"});
    CHECK(cfs[1].render() ==
          std::vector<std::string>{"r(n2) = n2^2+n2*(u(0)-1)+r(0)", "v(n2) = v(0)", "u(n2) = 2*n2+u(0)"});

    // The same statements as polynomial identities.
    const UniversePtr& u1 = cfs[0].universe;
    CHECK(cfs[0].forms[0] == ExpPoly::constant(u1, P(u1, "-n1^2 - n1*(v_0 - 1) + r_0")));
    CHECK(cfs[0].forms[1] == ExpPoly::constant(u1, P(u1, "2*n1 + v_0")));
    CHECK(cfs[0].forms[2] == ExpPoly::constant(u1, P(u1, "u_0")));
    const UniversePtr& u2 = cfs[1].universe;
    CHECK(cfs[1].forms[0] == ExpPoly::constant(u2, P(u2, "n2^2 + n2*(u_0 - 1) + r_0")));
    CHECK(cfs[1].forms[1] == ExpPoly::constant(u2, P(u2, "v_0")));
    CHECK(cfs[1].forms[2] == ExpPoly::constant(u2, P(u2, "2*n2 + u_0")));
    CHECK(cfs[0].bases.empty());
}

TEST_CASE("solve_cfinite examples") {
    UniversePtr u = counter_universe({"v", "r", "x", "f"});
    ExpPoly zero(u);
    CHECK(solve_cfinite({1}, ExpPoly::constant(u, P(u, "2")), {P(u, "v_0")}) == ExpPoly::constant(u, P(u, "2*n1 + v_0")));
    CHECK(solve_cfinite({1}, ExpPoly::constant(u, P(u, "-2*n1 - v_0")), {P(u, "r_0")}) ==
          ExpPoly::constant(u, P(u, "-n1^2 - n1*(v_0 - 1) + r_0")));
    CHECK(solve_cfinite({2}, zero, {P(u, "x_0")}) == ExpPoly::geometric(u, 2, P(u, "x_0")));

    ExpPoly f = solve_cfinite({2, 1}, zero, {P(u, "f_0"), P(u, "3")});
    CHECK(f.terms().size() == 2);
    CHECK(f.terms().count(Rational(2)) == 1);
    CHECK(f.terms().count(Rational(-1)) == 1);
    std::vector<Rational> seq{5, 3};
    for (int n = 2; n < 10; ++n) seq.push_back(seq[std::size_t(n - 1)] + 2 * seq[std::size_t(n - 2)]);
    for (int n = 0; n < 10; ++n) CHECK(f.evaluate(n, {0, 0, 0, 0, 5}) == seq[std::size_t(n)]);

    CHECK_THROWS_WITH_AS(solve_cfinite({1, 1}, zero, {P(u, "0"), P(u, "1")}, "fib"),
                         doctest::Contains("'fib'"), Error);
}

TEST_CASE("root zero produces finite corrections") {
    UniversePtr u = counter_universe({"y", "t"});
    // y(n+1) = 0
    ExpPoly reset = solve_cfinite({0}, ExpPoly(u), {P(u, "y_0")});
    CHECK(reset.terms().empty());
    CHECK(reset.render() == "[n1=0]*y(0)");
    CHECK(reset.at(0) == P(u, "y_0"));
    CHECK(reset.at(3).is_zero());
    // t(n+1) = 3^n: t(n) = 3^(n-1) for n >= 1
    ExpPoly delayed = solve_cfinite({0}, ExpPoly::geometric(u, 3, P(u, "1")), {P(u, "t_0")});
    CHECK(delayed.at(0) == P(u, "t_0"));
    for (long n = 1; n < 6; ++n) CHECK(delayed.at(n) == P(u, "1") * pow(Rational(3), n - 1));
    CHECK(delayed.render() == "1/3*3^n1+[n1=0]*(t(0)-1/3)");

    auto swap = solve_source("while true t = r; r = 2*r - p; p = t end");
    std::mt19937_64 rng(3);
    auto sys = extract_all(frontend::flatten(frontend::parse("while true t = r; r = 2*r - p; p = t end")))[0];
    CHECK(matches_unrolling(sys, swap[0], rng));
}

TEST_CASE("sum_exp_poly") {
    UniversePtr u = counter_universe({"v"});
    CHECK(sum_exp_poly(ExpPoly::constant(u, P(u, "1"))) == ExpPoly::constant(u, P(u, "n1")));
    CHECK(sum_exp_poly(ExpPoly::constant(u, P(u, "2*n1 + v_0"))) == ExpPoly::constant(u, P(u, "n1^2 + n1*(v_0 - 1)")));
    ExpPoly geo = ExpPoly::geometric(u, 2, P(u, "1")) - ExpPoly::constant(u, P(u, "1"));
    CHECK(sum_exp_poly(ExpPoly::geometric(u, 2, P(u, "1"))) == geo);

    std::mt19937_64 rng(5);
    const Rational bases[] = {1, 2, -1, make_rational(1, 2), -3};
    for (int trial = 0; trial < 100; ++trial) {
        ExpPoly e(u);
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < k; ++i) {
            Rational b = bases[std::uniform_int_distribution<int>(0, 4)(rng)];
            e.add_term(b, aligator::testing::random_poly(rng, u, 3, 3));
        }
        if (trial % 3 == 0) e.add_delta(std::uniform_int_distribution<int>(0, 3)(rng), P(u, "v_0 + 1"));
        ExpPoly s = sum_exp_poly(e);
        CHECK(s.at(0).is_zero());
        CHECK(s.shift(1) - s == e);
    }
}

TEST_CASE("resonance raises the polynomial degree by the root multiplicity") {
    UniversePtr u = counter_universe({"y"});
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        Rational theta = std::vector<Rational>{2, -1, make_rational(1, 3), 1}[std::size_t(trial % 4)];
        unsigned mult = unsigned(trial % 3) + 1;
        unsigned deg = unsigned(trial / 4 % 3);
        // (x - theta)^mult * (x - 5)
        std::vector<Rational> roots(mult, theta);
        roots.push_back(7);
        UniPoly chi = UniPoly::from_roots(roots);
        std::vector<Rational> a;
        for (int k = 0; k < chi.degree(); ++k) a.push_back(-chi.coeff(std::size_t(k)));
        MultiPoly q = MultiPoly::variable(u, 0).pow(deg) * Rational(trial % 5 + 1) + P(u, "y_0");
        std::vector<MultiPoly> init;
        for (std::size_t k = 0; k < a.size(); ++k) init.push_back(P(u, "y_0") * Rational(long(k)));
        ExpPoly y = solve_cfinite(a, ExpPoly::geometric(u, theta, q), init);
        CHECK(y.degree_at(theta) == int(deg + mult));
    }
}

TEST_CASE("dependency blocks") {
    auto sys = extract_all(frontend::flatten(frontend::parse("while true r = r - v; v = v + 2 end")))[0];
    sys.variables.push_back("u");
    Update id;
    id.coeffs = {0, 0, 1};
    for (auto& up : sys.updates) up.coeffs.push_back(0);
    sys.updates.push_back(id);
    CHECK(dependency_blocks(sys) == std::vector<std::vector<std::size_t>>{{1}, {2}, {0}});

    auto swap = affine_system({"x", "y"}, {{0, 1}, {1, 0}}, {0, 0});
    CHECK(dependency_blocks(swap) == std::vector<std::vector<std::size_t>>{{0, 1}});
    auto indep = affine_system({"x", "y"}, {{2, 0}, {0, 1}}, {0, 1});
    CHECK(dependency_blocks(indep) == std::vector<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("two-cycle block") {
    auto sys = affine_system({"x", "y"}, {{0, 1}, {1, 0}}, {0, 0});
    ClosedFormSystem cfs = closed_forms(sys);
    const UniversePtr& u = cfs.universe;
    ExpPoly expected = ExpPoly::constant(u, P(u, "(x_0 + y_0)/2"));
    expected.add_term(-1, P(u, "(x_0 - y_0)/2"));
    CHECK(cfs.forms[0] == expected);
    CHECK(cfs.bases == std::vector<Rational>{-1});
    std::mt19937_64 rng(1);
    CHECK(matches_unrolling(sys, cfs, rng));
}

TEST_CASE("rational scaling") {
    UniversePtr u = counter_universe({"v"});
    RatFunc three = RatFunc::constant(3);
    CHECK(solve_rational_scale(three, P(u, "v_0"), u) == ExpPoly::geometric(u, 3, P(u, "v_0")));
    UniPoly n = UniPoly::x();
    RatFunc ratio(n + UniPoly::constant(2), n + UniPoly::constant(1));
    ExpPoly v = solve_rational_scale(ratio, P(u, "v_0"), u);
    CHECK(v == ExpPoly::constant(u, P(u, "v_0*(n1 + 1)")));
    Rational value = 5;
    for (long k = 0; k < 10; ++k) {
        CHECK(v.evaluate(k, {0, 5}) == value);
        value *= ratio.evaluate(k);
    }
    RatFunc bad(n * n + UniPoly::constant(1), n * n);
    CHECK_THROWS_WITH_AS(solve_rational_scale(bad, P(u, "v_0"), u), doctest::Contains("not of the form"), Error);
    RatFunc fact(n + UniPoly::constant(1), UniPoly::constant(1));
    CHECK_THROWS_AS(solve_rational_scale(fact, P(u, "v_0"), u), Error);

    // (2n+6)/(n+1) = 2*u(n+1)/u(n) with u = (n+1)(n+2)
    auto cfs = solve_source("while true x = (2*n1 + 6)*x/(n1 + 1) end");
    auto sys = extract_all(frontend::flatten(frontend::parse("while true x = (2*n1 + 6)*x/(n1 + 1) end")))[0];
    std::mt19937_64 rng(2);
    CHECK(matches_unrolling(sys, cfs[0], rng));
    CHECK(cfs[0].bases == std::vector<Rational>{2});
}

TEST_CASE("property: random C-finite systems agree with unrolling") {
    std::mt19937_64 rng(2024);
    int solved = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto sys = oracles::random_cfinite_system(rng);
        ClosedFormSystem cfs = closed_forms(sys);
        bool ok = matches_unrolling(sys, cfs, rng);
        CHECK_MESSAGE(ok, cfs.render()[0]);
        solved += ok;
    }
    CHECK(solved == 200);
}
