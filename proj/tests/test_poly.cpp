#include <doctest.h>

#include "common/error.hpp"
#include "poly/groebner.hpp"
#include "poly/univariate.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace aligator;
using aligator::testing::ideal_of;
using aligator::testing::P;
using aligator::testing::random_poly;
using aligator::testing::universe_of;

TEST_CASE("rational field axioms on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    for (int i = 0; i < 500; ++i) {
        Rational a = make_rational(num(rng), den(rng));
        Rational b = make_rational(num(rng), den(rng));
        Rational c = make_rational(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(-a) == 0);
        if (a != 0) CHECK(a * (Rational(1) / a) == 1);
        Rational s = a * b;
        CHECK(gcd(BigInt(abs(s.get_num())), s.get_den()) == 1);
        CHECK(s.get_den() > 0);
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("12") == 12);
    CHECK(parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(parse_rational("0.25") == make_rational(1, 4));
    CHECK(to_string(make_rational(4, -6)) == "-2/3");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("polynomial arithmetic and canonical printing") {
    auto u = universe_of({"r_0", "v_0", "u_0", "r", "v", "u"});
    auto p = P(u, "v_0^2-u_0^2-v^2+u^2+4*r_0-2*v_0+2*u_0-4*r+2*v-2*u");
    CHECK(to_string(p) == "v_0^2-u_0^2-v^2+u^2+4*r_0-2*v_0+2*u_0-4*r+2*v-2*u");
    CHECK(to_string(P(u, "(r+1)^2 - r^2")) == "2*r+1");
    CHECK(to_string(P(u, "r/2 - r_0/3")) == "-1/3*r_0+1/2*r");
    CHECK(P(u, "(r - v)*(r + v)") == P(u, "r^2 - v^2"));
    CHECK((p - p).is_zero());
    CHECK(to_string(P(u, "0")) == "0");
    CHECK(P(u, "2*r - 4*v/3").primitive() == P(u, "3*r - 2*v"));
    CHECK(P(u, "-r + v").primitive() == P(u, "r - v"));
    CHECK(P(u, "-r^2") == P(u, "r^2") * Rational(-1));
    CHECK(P(u, "2*-r^2") == P(u, "-2*r^2"));
}

TEST_CASE("substitution, evaluation and rebasing") {
    auto u = universe_of({"x", "y"});
    auto p = P(u, "x^2 - y");
    auto q = p.substitute(0, P(u, "y + 1"));
    CHECK(q == P(u, "y^2 + y + 1"));
    std::vector<Rational> pt{Rational(3), Rational(2)};
    CHECK(p.evaluate(pt) == 7);
    auto bigger = universe_of({"z", "y", "x"});
    auto r = p.rebase(bigger);
    CHECK(to_string(r) == "x^2-y");
    CHECK_THROWS_AS(p.rebase(universe_of({"x"})), Error);
    CHECK_THROWS_AS(p + P(bigger, "z"), Error);
}

TEST_CASE("normal_form examples") {
    auto u = universe_of({"x", "y"});
    auto lex = MonomialOrder::lex(2);
    std::vector<MultiPoly> g{P(u, "x - y")};
    // Hand division: replace x by y.
    CHECK(normal_form(P(u, "x^2 - y"), g, lex) == P(u, "y^2 - y"));
    auto f = P(u, "x^3*y + 2*x - 7");
    std::vector<MultiPoly> self{f};
    CHECK(normal_form(f, self, MonomialOrder::degrevlex(2)).is_zero());
    std::vector<MultiPoly> x{P(u, "x")};
    CHECK(normal_form(P(u, "1"), x, lex) == P(u, "1"));
    auto other = universe_of({"a"});
    CHECK_THROWS_AS(normal_form(P(other, "a"), g, MonomialOrder::lex(1)), Error);
}

TEST_CASE("normal_form is idempotent") {
    std::mt19937_64 rng(11);
    auto u = universe_of({"a", "b", "c"});
    auto ord = MonomialOrder::degrevlex(3);
    for (int i = 0; i < 50; ++i) {
        std::vector<MultiPoly> g{random_poly(rng, u, 2, 3), random_poly(rng, u, 2, 3)};
        std::erase_if(g, [](const MultiPoly& q) { return q.is_zero(); });
        auto p = random_poly(rng, u, 3, 5);
        auto r = normal_form(p, g, ord);
        CHECK(normal_form(r, g, ord) == r);
    }
}

TEST_CASE("buchberger examples") {
    auto u = universe_of({"x", "y"});
    auto lex = MonomialOrder::lex(2);
    std::vector<MultiPoly> single{P(u, "x - 1")};
    auto a = buchberger(single, lex);
    REQUIRE(a.generators().size() == 1);
    CHECK(a.generators()[0] == P(u, "x - 1"));
    CHECK(a.reduced());

    // By hand: S(x^2+y^2, xy) = y^3, which is irreducible; the remaining
    // S-polynomials reduce to zero.
    std::vector<MultiPoly> gens{P(u, "x^2 + y^2"), P(u, "x*y")};
    auto gb = buchberger(gens, lex);
    REQUIRE(gb.generators().size() == 3);
    CHECK(gb.generators()[0] == P(u, "x^2 + y^2"));
    CHECK(gb.generators()[1] == P(u, "x*y"));
    CHECK(gb.generators()[2] == P(u, "y^3"));

    std::vector<MultiPoly> zeros{P(u, "0")};
    CHECK(buchberger(u, zeros, lex).is_zero());
    std::vector<MultiPoly> unit{P(u, "x"), P(u, "x + 1")};
    auto one = buchberger(unit, lex);
    CHECK(one.is_unit());
}

namespace {

void check_groebner_criterion(const Ideal& gb) {
    const auto& g = gb.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g[i].leading_term(gb.order()).coeff == 1);
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            auto s = s_polynomial(g[i], g[j], gb.order());
            CHECK(normal_form(s, g, gb.order()).is_zero());
            CHECK_FALSE(g[i].leading_term(gb.order()).mono.divides(g[j].leading_term(gb.order()).mono));
            CHECK_FALSE(g[j].leading_term(gb.order()).mono.divides(g[i].leading_term(gb.order()).mono));
        }
    }
}

}  // namespace

TEST_CASE("buchberger properties on random ideals") {
    std::mt19937_64 rng(2024);
    auto u = universe_of({"a", "b", "c", "d"});
    for (int trial = 0; trial < 60; ++trial) {
        auto order = trial % 3 == 0 ? MonomialOrder::lex(4) : MonomialOrder::degrevlex(4);
        std::vector<MultiPoly> gens;
        int k = 1 + int(rng() % 3);
        for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, u, 2, 3));
        auto gb = buchberger(u, gens, order);
        if (gb.generators().size() <= 10) check_groebner_criterion(gb);
        // <input> = <output>
        for (const auto& f : gens) CHECK(normal_form(f, gb.generators(), order).is_zero());
        Ideal input(u, gens, order);
        for (const auto& g : gb.generators()) CHECK(ideal_contains(canonicalize(input), g));
        // Permutation independence.
        std::reverse(gens.begin(), gens.end());
        auto again = buchberger(u, gens, order);
        CHECK(again.generators() == gb.generators());
    }
}

TEST_CASE("eliminate examples") {
    auto u = make_universe({counter_var(1), initial_var("r"), initial_var("v"), initial_var("u"), program_var("r"),
                            program_var("v"), program_var("u")});
    std::vector<std::string> kill{"n1"};

    auto only = ideal_of(u, {"v - 2*n1 - v_0"});
    CHECK(eliminate(only, kill).is_zero());

    auto two = ideal_of(u, {"v - 2*n1 - v_0", "u - u_0"});
    auto e2 = eliminate(two, kill);
    REQUIRE(e2.generators().size() == 1);
    CHECK(e2.generators()[0].primitive() == P(e2.universe(), "u_0 - u"));
    CHECK_FALSE(e2.universe()->contains("n1"));

    auto path1 = ideal_of(u, {"v - 2*n1 - v_0", "r - r_0 + n1^2 + n1*(v_0 - 1)"});
    auto e3 = eliminate(path1, kill);
    REQUIRE(e3.generators().size() == 1);
    // n1 = (v - v_0)/2 substituted and denominators cleared.
    auto expected = P(e3.universe(), "4*r - 4*r_0 + v^2 - v_0^2 - 2*v + 2*v_0");
    CHECK(e3.generators()[0].primitive() == expected.primitive());
    // The generator vanishes on unrolled executions of r := r - v; v := v + 2.
    std::vector<Rational> pt(e3.universe()->size());
    Rational r0 = make_rational(3, 7), v0 = make_rational(-5, 2), u0 = 4;
    Rational r = r0, v = v0;
    for (int step = 0; step < 15; ++step) {
        for (std::size_t i = 0; i < pt.size(); ++i) {
            const auto& name = (*e3.universe())[i].name;
            pt[i] = name == "r_0" ? r0 : name == "v_0" ? v0 : name == "u_0" ? u0 : name == "r" ? r : name == "v" ? v : u0;
        }
        CHECK(expected.evaluate(pt) == 0);
        r = r - v;
        v = v + 2;
    }
}

TEST_CASE("intersect examples") {
    auto u = universe_of({"x", "y"});
    auto x = ideal_of(u, {"x"});
    auto y = ideal_of(u, {"y"});
    auto xy = intersect(x, y);
    REQUIRE(xy.generators().size() == 1);
    CHECK(xy.generators()[0] == P(u, "x*y"));
    CHECK(ideal_subset(xy, x));
    CHECK(ideal_subset(xy, y));

    auto i = ideal_of(u, {"x^2 - y", "x*y - 1"});
    CHECK(ideal_equal(intersect(i, i), i));
    CHECK(intersect(ideal_of(u, {"x - 1"}), Ideal::zero(u)).is_zero());
}

TEST_CASE("ideal_equal examples") {
    auto u = universe_of({"x", "y"});
    CHECK(ideal_equal(ideal_of(u, {"x - y"}), ideal_of(u, {"2*x - 2*y"})));
    CHECK_FALSE(ideal_equal(ideal_of(u, {"x"}), ideal_of(u, {"x^2"})));
    CHECK(ideal_equal(ideal_of(u, {"x*y", "x^2 + y^2"}), ideal_of(u, {"x^2+y^2", "x*y", "y^3"})));
    CHECK_THROWS_AS(ideal_equal(ideal_of(u, {"x"}), ideal_of(universe_of({"y", "x"}), {"x"})), Error);
}

TEST_CASE("rational_roots examples") {
    auto u = universe_of({"x"});
    auto a = rational_roots(P(u, "x^2 - 3*x + 2"));
    REQUIRE(a.roots.size() == 2);
    CHECK(a.roots[0] == std::pair<Rational, unsigned>{Rational(1), 1});
    CHECK(a.roots[1] == std::pair<Rational, unsigned>{Rational(2), 1});
    CHECK(a.cofactor == UniPoly::constant(1));

    auto b = rational_roots(P(u, "(x - 1)^3"));
    REQUIRE(b.roots.size() == 1);
    CHECK(b.roots[0] == std::pair<Rational, unsigned>{Rational(1), 3});
    CHECK(b.splits());

    auto c = rational_roots(P(u, "x^2 - 2"));
    CHECK(c.roots.empty());
    CHECK(c.cofactor == UniPoly({Rational(-2), Rational(0), Rational(1)}));
    CHECK_FALSE(c.splits());

    auto d = rational_roots(P(u, "x^3*(2*x - 1)*(3*x + 4)^2 * (x^2 + 1)"));
    REQUIRE(d.roots.size() == 3);
    CHECK(d.roots[0] == std::pair<Rational, unsigned>{make_rational(-4, 3), 2});
    CHECK(d.roots[1] == std::pair<Rational, unsigned>{Rational(0), 3});
    CHECK(d.roots[2] == std::pair<Rational, unsigned>{make_rational(1, 2), 1});
    CHECK(d.cofactor == UniPoly({Rational(1), Rational(0), Rational(1)}));

    CHECK_THROWS_AS(rational_roots(P(universe_of({"x", "y"}), "x*y - 1")), Error);
}

TEST_CASE("rational_roots matches random products of linear factors") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> roots;
        int k = 1 + int(rng() % 4);
        for (int j = 0; j < k; ++j) roots.push_back(make_rational(num(rng), den(rng)));
        auto f = rational_roots(UniPoly::from_roots(roots) * make_rational(3, 5));
        CHECK(f.splits());
        unsigned total = 0;
        for (const auto& [r, m] : f.roots) {
            total += m;
            CHECK(unsigned(std::count(roots.begin(), roots.end(), r)) == m);
        }
        CHECK(total == roots.size());
    }
}

TEST_CASE("univariate helpers") {
    UniPoly p({Rational(1), Rational(2), Rational(1)});  // (x+1)^2
    CHECK(p.shift(Rational(-1)) == UniPoly({Rational(0), Rational(0), Rational(1)}));
    auto [q, r] = p.divmod(UniPoly({Rational(1), Rational(1)}));
    CHECK(q == UniPoly({Rational(1), Rational(1)}));
    CHECK(r.is_zero());
    CHECK(gcd(p, UniPoly({Rational(-1), Rational(0), Rational(1)})) == UniPoly({Rational(1), Rational(1)}));
}
