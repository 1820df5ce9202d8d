#pragma once

// Independent checks and random generators shared by the unit tests and the
// acceptance binary. Nothing here depends on doctest.

#include "invariants/invariants.hpp"
#include "poly/groebner.hpp"
#include "recurrence/extract.hpp"
#include "solve/solve.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

namespace aligator::oracles {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return make_rational(num(rng), den(rng));
}

// Sparse random polynomial: 1..max_terms terms, small integer coefficients,
// never constant.
inline MultiPoly random_poly(std::mt19937_64& rng, const UniversePtr& u, unsigned max_degree, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> exp(0, max_degree);
    for (;;) {
        std::vector<Term> terms;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            Monomial m;
            unsigned budget = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
            for (std::size_t v = 0; v < u->size() && budget > 0; ++v) {
                unsigned e = std::min(budget, exp(rng) % (budget + 1));
                m.set(v, e);
                budget -= e;
            }
            int c = coeff(rng);
            if (c == 0) c = 1;
            terms.push_back({m, Rational(c)});
        }
        MultiPoly p = MultiPoly::from_terms(u, std::move(terms));
        if (!p.is_constant()) return p;
    }
}

// Reduced Groebner basis check straight from the definition: monic leading
// terms, no leading term divides another, every S-polynomial reduces to 0.
inline bool is_reduced_groebner(const Ideal& gb) {
    const auto& g = gb.generators();
    const auto& order = gb.order();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].leading_term(order).coeff != 1) return false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            if (g[i].leading_term(order).mono.divides(g[j].leading_term(order).mono)) return false;
            if (j > i && !normal_form(s_polynomial(g[i], g[j], order), g, order).is_zero()) return false;
        }
    }
    return true;
}

inline RecurrenceSystem affine_system(const std::vector<std::string>& vars,
                                      const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& c) {
    RecurrenceSystem sys;
    sys.counter = "n1";
    sys.variables = vars;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Update u;
        u.coeffs = a[i];
        u.constant = c[i];
        sys.updates.push_back(u);
    }
    return sys;
}

// x(n+1) = A x(n) + c with 1..3 variables and A = P T P^-1, T upper
// triangular, so the characteristic polynomial splits over Q by construction.
inline RecurrenceSystem random_cfinite_system(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::size_t d = std::size_t(pick(1, 3));
    using Matrix = std::vector<std::vector<Rational>>;
    Matrix t(d, std::vector<Rational>(d, Rational(0)));
    const Rational eig[] = {0, 1, 1, -1, 2, 3, make_rational(1, 2), -2};
    for (std::size_t i = 0; i < d; ++i) {
        t[i][i] = eig[pick(0, 7)];
        for (std::size_t j = i + 1; j < d; ++j) t[i][j] = pick(-2, 2);
    }
    // P unit lower triangular; its inverse by forward substitution.
    Matrix l(d, std::vector<Rational>(d, Rational(0))), linv = l;
    for (std::size_t i = 0; i < d; ++i) l[i][i] = 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j) l[i][j] = pick(-2, 2);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t i = 0; i < d; ++i) {
            Rational s = i == c ? 1 : 0;
            for (std::size_t j = 0; j < i; ++j) s -= l[i][j] * linv[j][c];
            linv[i][c] = s;
        }
    }
    auto mul = [&](const Matrix& x, const Matrix& y) {
        Matrix out(d, std::vector<Rational>(d, Rational(0)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t j = 0; j < d; ++j) out[i][j] += x[i][k] * y[k][j];
        return out;
    };
    Matrix a = mul(mul(l, t), linv);
    if (pick(0, 1)) {
        // Reverse variable order to vary the block structure.
        for (auto& row : a) std::reverse(row.begin(), row.end());
        std::reverse(a.begin(), a.end());
    }
    std::vector<Rational> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(pick(0, 2) ? Rational(pick(-3, 3)) : Rational(0));
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(d);
    return affine_system(names, a, c);
}

// Exact comparison of every closed form with direct iteration for n <= steps.
inline bool matches_unrolling(const RecurrenceSystem& sys, const ClosedFormSystem& cfs, std::mt19937_64& rng,
                              long steps = 25) {
    std::vector<Rational> state, point{Rational(0)};
    for (std::size_t i = 0; i < sys.variables.size(); ++i) {
        state.push_back(random_rational(rng));
        point.push_back(state.back());
    }
    for (long n = 0; n <= steps; ++n) {
        for (std::size_t i = 0; i < state.size(); ++i) {
            if (cfs.forms[i].evaluate(n, point) != state[i]) return false;
        }
        state = sys.step(state, n);
    }
    return true;
}

// Bases ±2^a 3^b 5^c with |a|,|b|,|c| <= 3, plus -1. The exponent vector
// and sign are kept alongside, so relations are decided in integers.
struct GridBase {
    std::array<int, 3> exponents;
    int sign;  // 1 when negative
    Rational value;
};

inline std::vector<GridBase> base_grid() {
    std::vector<GridBase> out;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                Rational v = pow(Rational(2), a) * pow(Rational(3), b) * pow(Rational(5), c);
                out.push_back({{a, b, c}, 0, v});
                out.push_back({{a, b, c}, 1, -v});
            }
    out.push_back({{0, 0, 0}, 1, Rational(-1)});
    return out;
}

struct GridSweep {
    long triples = 0;    // unordered triples visited
    long computed = 0;   // triples handed to base_relations
    long relations = 0;  // relation vectors checked for membership
    long missing = 0;    // relation vectors not in the computed ideal
    long unsound = 0;    // generators that fail on theta^n
};

// Every unordered triple with index % stride == 0. A relation vector e in
// [-3, 3]^3 holds iff sum e_i * exponents_i = 0 and sum e_i * sign_i is even;
// each one must reduce to zero modulo the computed relations. Triples with
// independent exponent vectors have no relation at all and skip the solver.
inline GridSweep sweep_base_grid(long stride = 1) {
    const auto grid = base_grid();
    GridSweep out;
    long index = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i + 1; j < grid.size(); ++j)
            for (std::size_t k = j + 1; k < grid.size(); ++k) {
                if (index++ % stride) continue;
                ++out.triples;
                const GridBase* g[3] = {&grid[i], &grid[j], &grid[k]};
                const auto &x = g[0]->exponents, &y = g[1]->exponents, &z = g[2]->exponents;
                long det = long(x[0]) * (y[1] * z[2] - y[2] * z[1]) - long(x[1]) * (y[0] * z[2] - y[2] * z[0]) +
                           long(x[2]) * (y[0] * z[1] - y[1] * z[0]);
                if (det != 0) continue;

                std::vector<std::array<int, 3>> holding;
                for (int e0 = -3; e0 <= 3; ++e0)
                    for (int e1 = -3; e1 <= 3; ++e1)
                        for (int e2 = -3; e2 <= 3; ++e2) {
                            if (e0 == 0 && e1 == 0 && e2 == 0) continue;
                            bool ok = (e0 * g[0]->sign + e1 * g[1]->sign + e2 * g[2]->sign) % 2 == 0;
                            for (int p = 0; p < 3 && ok; ++p)
                                ok = e0 * x[p] + e1 * y[p] + e2 * z[p] == 0;
                            if (ok) holding.push_back({e0, e1, e2});
                        }
                if (holding.empty()) continue;

                ++out.computed;
                auto env = base_relations({g[0]->value, g[1]->value, g[2]->value});
                for (const auto& r : env.relations)
                    for (long n = 0; n < 4; ++n) {
                        std::vector<Rational> pt;
                        for (const auto* b : g) pt.push_back(pow(b->value, n));
                        if (r.evaluate(pt) != 0) ++out.unsound;
                    }
                Ideal gb = canonicalize(Ideal(env.universe, env.relations, canonical_order(*env.universe)));
                for (const auto& e : holding) {
                    Monomial plus, minus;
                    for (std::size_t q = 0; q < 3; ++q) {
                        if (e[q] > 0) plus.set(q, unsigned(e[q]));
                        if (e[q] < 0) minus.set(q, unsigned(-e[q]));
                    }
                    MultiPoly binomial =
                        MultiPoly::monomial(env.universe, plus) - MultiPoly::monomial(env.universe, minus);
                    ++out.relations;
                    if (!normal_form(binomial, gb.generators(), gb.order()).is_zero()) ++out.missing;
                }
            }
    return out;
}

}  // namespace aligator::oracles
