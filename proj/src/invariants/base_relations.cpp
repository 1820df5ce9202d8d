#include "invariants/invariants.hpp"

#include "common/error.hpp"

#include <algorithm>

namespace aligator {

namespace {

// Pairwise coprime integers > 1 such that every input factors over them.
std::vector<BigInt> coprime_base(std::vector<BigInt> xs) {
    std::erase_if(xs, [](const BigInt& x) { return x <= 1; });
    for (bool changed = true; changed;) {
        changed = false;
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        for (std::size_t i = 0; i < xs.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < xs.size() && !changed; ++j) {
                BigInt g = gcd(xs[i], xs[j]);
                if (g == 1) continue;
                BigInt a = xs[i] / g, b = xs[j] / g;
                xs.erase(xs.begin() + long(j));
                xs.erase(xs.begin() + long(i));
                for (const BigInt& v : {g, a, b})
                    if (v > 1) xs.push_back(v);
                changed = true;
            }
        }
    }
    return xs;
}

long valuation(BigInt x, const BigInt& p) {
    long e = 0;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    return e;
}

// Generators of {e : a*e = 0} over Z, by unimodular column reduction.
std::vector<std::vector<BigInt>> integer_kernel(std::vector<std::vector<BigInt>> a, std::size_t cols) {
    std::vector<std::vector<BigInt>> u(cols, std::vector<BigInt>(cols, BigInt(0)));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
    auto column_op = [&](std::size_t dst, std::size_t src, const BigInt& q) {  // col dst -= q * col src
        for (auto& row : a) row[dst] -= q * row[src];
        for (auto& row : u) row[dst] -= q * row[src];
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto& row : a) std::swap(row[x], row[y]);
        for (auto& row : u) std::swap(row[x], row[y]);
    };
    std::size_t p = 0;
    for (std::size_t i = 0; i < a.size() && p < cols; ++i) {
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = p; j < cols; ++j) {
                if (a[i][j] != 0 && (best == cols || abs(a[i][j]) < abs(a[i][best]))) best = j;
            }
            if (best == cols) break;
            swap_cols(p, best);
            bool done = true;
            for (std::size_t j = p + 1; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[i][p].get_mpz_t());
                column_op(j, p, q);
                if (a[i][j] != 0) done = false;
            }
            if (done) {
                ++p;
                break;
            }
        }
    }
    std::vector<std::vector<BigInt>> kernel;
    for (std::size_t j = p; j < cols; ++j) {
        std::vector<BigInt> v;
        for (std::size_t r = 0; r < cols; ++r) v.push_back(u[r][j]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

BaseSequenceEnv base_relations(const std::vector<Rational>& bases) {
    BaseSequenceEnv env;
    env.bases = bases;
    std::size_t k = bases.size();
    std::vector<VarId> vars;
    for (std::size_t i = 0; i < k; ++i) {
        if (bases[i] == 0 || bases[i] == 1) {
            throw Error(ErrorKind::Structural, diag::kInvalidArgument, "base sequences need bases other than 0 and 1");
        }
        for (std::size_t j = 0; j < i; ++j)
            if (bases[j] == bases[i]) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "repeated base");
        vars.push_back(base_sequence_var(i + 1));
        env.vars.push_back(vars.back().name);
    }
    env.universe = make_universe(vars);
    if (k == 0) return env;

    std::vector<BigInt> parts;
    for (const auto& b : bases) {
        parts.push_back(abs(b.get_num()));
        parts.push_back(b.get_den());
    }
    std::vector<BigInt> primes = coprime_base(parts);

    // Rows: one per coprime factor, then the sign row with a slack column
    // contributing -2 (parity).
    std::vector<std::vector<BigInt>> m;
    for (const auto& p : primes) {
        std::vector<BigInt> row(k + 1, BigInt(0));
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = valuation(abs(bases[i].get_num()), p) - valuation(BigInt(bases[i].get_den()), p);
        }
        m.push_back(std::move(row));
    }
    std::vector<BigInt> sign(k + 1, BigInt(0));
    for (std::size_t i = 0; i < k; ++i) sign[i] = bases[i] < 0 ? 1 : 0;
    sign[k] = -2;
    m.push_back(std::move(sign));

    for (auto v : integer_kernel(std::move(m), k + 1)) {
        v.pop_back();
        if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; })) continue;
        env.lattice.push_back(std::move(v));
    }
    if (env.lattice.empty()) return env;

    // Saturate the binomial ideal by the product of all t_i.
    std::vector<VarId> sat_vars{auxiliary_var("s__sat")};
    sat_vars.insert(sat_vars.end(), vars.begin(), vars.end());
    UniversePtr su = make_universe(sat_vars);
    std::vector<MultiPoly> gens;
    for (const auto& e : env.lattice) {
        Monomial plus, minus;
        for (std::size_t i = 0; i < k; ++i) {
            if (e[i] > 0) plus.set(i + 1, unsigned(e[i].get_ui()));
            if (e[i] < 0) minus.set(i + 1, unsigned(BigInt(-e[i]).get_ui()));
        }
        gens.push_back(MultiPoly::monomial(su, plus) - MultiPoly::monomial(su, minus));
    }
    Monomial all;
    all.set(0, 1);
    for (std::size_t i = 0; i < k; ++i) all.set(i + 1, 1);
    gens.push_back(MultiPoly::monomial(su, all) - MultiPoly::constant(su, 1));
    const std::string kill[] = {"s__sat"};
    Ideal sat = eliminate(Ideal(su, gens, canonical_order(*su)), kill);
    for (const auto& g : sat.generators()) env.relations.push_back(g.rebase(env.universe).primitive());
    return env;
}

}  // namespace aligator
