#include "solve/solve.hpp"

#include "common/deadline.hpp"
#include "common/error.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace aligator {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity(std::size_t d) {
    Matrix m(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    std::size_t d = a.size();
    Matrix out(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// det(x*I - A) as p[0] + p[1]*x + ... + p[d]*x^d, by Faddeev-LeVerrier.
std::vector<Rational> characteristic_polynomial(const Matrix& a) {
    std::size_t d = a.size();
    std::vector<Rational> p(d + 1, Rational(0));
    p[d] = 1;
    Matrix m(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t k = 1; k <= d; ++k) {
        Matrix am = multiply(a, m);
        for (std::size_t i = 0; i < d; ++i) am[i][i] += p[d - k + 1];
        m = std::move(am);
        Matrix prod = multiply(a, m);
        Rational trace = 0;
        for (std::size_t i = 0; i < d; ++i) trace += prod[i][i];
        p[d - k] = -trace / Rational(long(k));
    }
    return p;
}

// Solves the square nonsingular system m * x = rhs with polynomial right-hand sides.
std::vector<MultiPoly> solve_square(Matrix m, std::vector<MultiPoly> rhs) {
    std::size_t d = m.size();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && m[pivot][col] == 0) ++pivot;
        if (pivot == d) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "singular initial-value system");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        Rational inv = 1 / m[col][col];
        for (std::size_t j = col; j < d; ++j) m[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = col; j < d; ++j) m[r][j] -= f * m[col][j];
            rhs[r] -= rhs[col] * f;
        }
    }
    return rhs;
}

// Some solution of a possibly over- or underdetermined rational system.
std::optional<std::vector<Rational>> solve_any(Matrix m, std::vector<Rational> rhs, std::size_t unknowns) {
    std::size_t rows = m.size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < unknowns && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        std::swap(rhs[pivot], rhs[r]);
        Rational inv = 1 / m[r][col];
        for (std::size_t j = 0; j < unknowns; ++j) m[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || m[k][col] == 0) continue;
            Rational f = m[k][col];
            for (std::size_t j = 0; j < unknowns; ++j) m[k][j] -= f * m[r][j];
            rhs[k] -= f * rhs[r];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t k = r; k < rows; ++k) {
        if (rhs[k] != 0) return std::nullopt;
    }
    std::vector<Rational> x(unknowns, Rational(0));
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = rhs[k];
    return x;
}

UniPoly power_of_x(unsigned i) {
    std::vector<Rational> c(i + 1, Rational(0));
    c[i] = 1;
    return UniPoly(std::move(c));
}

MultiPoly counter_poly(const UniversePtr& u, const UniPoly& p) {
    MultiPoly n = MultiPoly::variable(u, 0);
    MultiPoly acc(u), power = MultiPoly::constant(u, 1);
    for (const auto& c : p.coeffs()) {
        if (c != 0) acc += power * c;
        power *= n;
    }
    return acc;
}

// Particular solution p(m)*theta^m of w(m+e) - sum_k b[k]*w(m+k) = m^k*theta^m,
// where theta is a characteristic root of multiplicity `mult`.
UniPoly unit_particular(const std::vector<Rational>& b, const Rational& theta, unsigned mult, unsigned k) {
    std::size_t e = b.size();
    auto apply = [&](unsigned i) {
        UniPoly xi = power_of_x(i);
        UniPoly acc = xi.shift(Rational(long(e))) * pow(theta, long(e));
        for (std::size_t j = 0; j < e; ++j) {
            if (b[j] != 0) acc = acc - xi.shift(Rational(long(j))) * Rational(b[j] * pow(theta, long(j)));
        }
        return acc;
    };
    UniPoly target = power_of_x(k), result;
    for (unsigned i = mult + k + 1; i-- > mult;) {
        UniPoly li = apply(i);
        Rational c = target.coeff(i - mult) / li.leading();
        if (c == 0) continue;
        result = result + power_of_x(i) * c;
        target = target - li * c;
    }
    if (!target.is_zero()) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "particular solution ansatz failed");
    return result;
}

}  // namespace

UniversePtr closed_form_universe(const std::string& counter, const std::vector<std::string>& variables) {
    std::vector<VarId> vars{VarId{counter, VarKind::Counter}};
    for (const auto& v : variables) vars.push_back(initial_var(v));
    return make_universe(std::move(vars));
}

std::vector<std::vector<std::size_t>> dependency_blocks(const RecurrenceSystem& sys) {
    std::size_t n = sys.variables.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        const Update& u = sys.updates[i];
        if (u.kind != Update::Kind::Affine) continue;
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = j != i && u.coeffs[j] != 0;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;

    std::vector<int> component(n, -1);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < n; ++i) {
        if (component[i] >= 0) continue;
        std::vector<std::size_t> block{i};
        component[i] = int(blocks.size());
        for (std::size_t j = i + 1; j < n; ++j) {
            if (reach[i][j] && reach[j][i]) {
                component[j] = int(blocks.size());
                block.push_back(j);
            }
        }
        blocks.push_back(std::move(block));
    }

    // Layer = length of the longest dependency chain below the block.
    std::vector<int> layer(blocks.size(), -1);
    std::function<int(std::size_t)> layer_of = [&](std::size_t b) {
        if (layer[b] >= 0) return layer[b];
        int best = 0;
        for (std::size_t i : blocks[b])
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][j] && component[j] != int(b)) best = std::max(best, layer_of(std::size_t(component[j])) + 1);
        return layer[b] = best;
    };
    std::vector<std::size_t> order(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        order[b] = b;
        layer_of(b);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return layer[x] < layer[y]; });
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t b : order) out.push_back(blocks[b]);
    return out;
}

ExpPoly solve_cfinite(const std::vector<Rational>& a, const ExpPoly& g, const std::vector<MultiPoly>& initials,
                      const std::string& label) {
    std::size_t d = a.size();
    if (d == 0 || initials.size() != d) {
        throw Error(ErrorKind::Structural, diag::kInvalidArgument, "recurrence order and initial values disagree");
    }
    const UniversePtr& u = g.universe();
    std::size_t mu = 0;
    while (mu < d && a[mu] == 0) ++mu;
    long J = g.deltas().empty() ? 0 : g.deltas().rbegin()->first + 1;
    std::size_t S = std::size_t(J) + mu, e = d - mu;

    // Terms y(0..S+e-1) by direct unrolling.
    std::vector<MultiPoly> y;
    for (const auto& p : initials) y.push_back(p.rebase(u));
    for (std::size_t n = 0; y.size() < std::max(d, S + e); ++n) {
        check_deadline();
        MultiPoly next = g.at(long(n));
        for (std::size_t k = 0; k < d; ++k) {
            if (a[k] != 0) next += y[n + k] * a[k];
        }
        y.push_back(std::move(next));
    }

    // w(m) = y(m+S) satisfies an order-e recurrence with nonzero roots and a
    // correction-free inhomogeneity.
    std::vector<Rational> b(a.begin() + long(mu), a.end());
    ExpPoly h = g.shift(J);
    std::vector<Rational> chi(e + 1);
    for (std::size_t k = 0; k < e; ++k) chi[k] = -b[k];
    chi[e] = 1;
    RootFactorization roots = rational_roots(UniPoly(chi));
    if (!roots.splits()) {
        throw Error(ErrorKind::Unsupported, diag::kIrrationalRoots,
                    "characteristic polynomial " + UniPoly(chi).to_string("x") + " of '" + label +
                        "' does not split over the rationals");
    }
    auto multiplicity = [&](const Rational& theta) -> unsigned {
        for (const auto& [r, m] : roots.roots)
            if (r == theta) return m;
        return 0;
    };

    ExpPoly w(u);
    for (const auto& [theta, q] : h.terms()) {
        check_deadline();
        std::vector<MultiPoly> qk = q.coefficients_in(0);
        MultiPoly coeff(u);
        for (unsigned k = 0; k < qk.size(); ++k) {
            if (qk[k].is_zero()) continue;
            coeff += counter_poly(u, unit_particular(b, theta, multiplicity(theta), k)) * qk[k];
        }
        w.add_term(theta, coeff);
    }

    if (e > 0) {
        std::vector<std::pair<Rational, unsigned>> columns;
        for (const auto& [r, m] : roots.roots)
            for (unsigned i = 0; i < m; ++i) columns.push_back({r, i});
        Matrix m(e, std::vector<Rational>(e));
        std::vector<MultiPoly> rhs;
        for (std::size_t j = 0; j < e; ++j) {
            for (std::size_t c = 0; c < e; ++c) m[j][c] = pow(Rational(long(j)), long(columns[c].second)) * pow(columns[c].first, long(j));
            rhs.push_back(y[S + j] - w.at(long(j)));
        }
        std::vector<MultiPoly> sol = solve_square(std::move(m), std::move(rhs));
        MultiPoly n = MultiPoly::variable(u, 0);
        for (std::size_t c = 0; c < e; ++c) w.add_term(columns[c].first, sol[c] * n.pow(columns[c].second));
    }

    ExpPoly out = w.shift(-long(S));
    for (std::size_t j = 0; j < S; ++j) out.add_delta(long(j), y[j] - out.at(long(j)));
    return out;
}

ExpPoly sum_exp_poly(const ExpPoly& e) {
    return solve_cfinite({Rational(1)}, e, {MultiPoly(e.universe())}, "sum");
}

std::vector<ExpPoly> solve_block(const RecurrenceSystem& sys, const std::vector<std::size_t>& block,
                                 const std::vector<ExpPoly>& forms, const UniversePtr& universe) {
    std::size_t d = block.size();
    Matrix a(d, std::vector<Rational>(d));
    std::vector<ExpPoly> inhom;
    for (std::size_t i = 0; i < d; ++i) {
        const Update& up = sys.updates[block[i]];
        if (up.kind != Update::Kind::Affine) {
            throw Error(ErrorKind::Structural, diag::kInvalidArgument, "solve_block expects affine updates");
        }
        for (std::size_t j = 0; j < d; ++j) a[i][j] = up.coeffs[block[j]];
        ExpPoly b = ExpPoly::constant(universe, MultiPoly::constant(universe, up.constant));
        for (std::size_t x = 0; x < sys.variables.size(); ++x) {
            if (up.coeffs[x] == 0 || std::find(block.begin(), block.end(), x) != block.end()) continue;
            b = b + forms[x] * up.coeffs[x];
        }
        inhom.push_back(std::move(b));
    }

    std::vector<Rational> p = characteristic_polynomial(a);
    std::vector<Matrix> powers{identity(d)};
    for (std::size_t k = 1; k < d; ++k) powers.push_back(multiply(powers.back(), a));
    std::vector<std::vector<ExpPoly>> shifted(d);  // shifted[j][l] = b_l(n+j)
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) shifted[j].push_back(inhom[l].shift(long(j)));

    // Cayley-Hamilton: sum_k p[k]*y(n+k) = sum_k p[k] sum_{j<k} A^(k-1-j) b(n+j).
    std::vector<ExpPoly> g(d, ExpPoly(universe));
    for (std::size_t k = 1; k <= d; ++k) {
        if (p[k] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
            const Matrix& pw = powers[k - 1 - j];
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t l = 0; l < d; ++l)
                    if (pw[i][l] != 0) g[i] = g[i] + shifted[j][l] * Rational(p[k] * pw[i][l]);
        }
    }
    std::vector<Rational> coeffs(d);
    for (std::size_t k = 0; k < d; ++k) coeffs[k] = -p[k];

    std::vector<std::vector<MultiPoly>> y(1);
    for (std::size_t i = 0; i < d; ++i) y[0].push_back(MultiPoly::variable(universe, sys.variables[block[i]] + "_0"));
    for (std::size_t t = 0; t + 1 < d; ++t) {
        std::vector<MultiPoly> next;
        for (std::size_t i = 0; i < d; ++i) {
            MultiPoly acc = inhom[i].at(long(t));
            for (std::size_t j = 0; j < d; ++j)
                if (a[i][j] != 0) acc += y[t][j] * a[i][j];
            next.push_back(std::move(acc));
        }
        y.push_back(std::move(next));
    }

    std::vector<ExpPoly> out;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<MultiPoly> init;
        for (std::size_t t = 0; t < d; ++t) init.push_back(y[t][i]);
        out.push_back(solve_cfinite(coeffs, g[i], init, sys.variables[block[i]]));
    }
    return out;
}

ExpPoly solve_rational_scale(const RatFunc& ratio, const MultiPoly& initial, const UniversePtr& universe,
                             const std::string& label) {
    const UniPoly& num = ratio.num();
    const UniPoly& den = ratio.den();
    auto fail = [&]() -> ExpPoly {
        throw Error(ErrorKind::Unsupported, diag::kNonTelescoping,
                    "scaling factor " + ratio.to_string("n") + " of '" + label +
                        "' is not of the form c*u(n+1)/u(n) with a polynomial u of degree at most 4");
    };
    if (num.is_zero() || num.degree() != den.degree()) return fail();
    for (const auto& [root, m] : rational_roots(den).roots) {
        (void)m;
        if (root >= 0 && is_integer(root)) return fail();
    }
    Rational c = num.leading();
    UniPoly nh = num * Rational(1 / c);

    // den(n)*u(n+1) = nh(n)*u(n) for monic u of degree k.
    for (unsigned k = 0; k <= 4; ++k) {
        check_deadline();
        std::size_t rows = std::size_t(den.degree()) + k + 1;
        Matrix m(rows, std::vector<Rational>(k, Rational(0)));
        std::vector<Rational> rhs(rows, Rational(0));
        for (unsigned i = 0; i <= k; ++i) {
            UniPoly xi = power_of_x(i);
            UniPoly col = den * xi.shift(1) - nh * xi;
            for (std::size_t r = 0; r < rows; ++r) {
                if (i < k) {
                    m[r][i] = col.coeff(r);
                } else {
                    rhs[r] = -col.coeff(r);
                }
            }
        }
        auto sol = solve_any(std::move(m), std::move(rhs), k);
        if (!sol) continue;
        std::vector<Rational> uc = *sol;
        uc.push_back(1);
        UniPoly up(uc);
        Rational u0 = up.evaluate(0);
        if (u0 == 0) continue;
        MultiPoly coeff = counter_poly(universe, up * Rational(1 / u0)) * initial.rebase(universe);
        return ExpPoly::geometric(universe, c, coeff);
    }
    return fail();
}

ClosedFormSystem closed_forms(const RecurrenceSystem& sys) {
    ClosedFormSystem cfs;
    cfs.counter = sys.counter;
    cfs.variables = sys.variables;
    cfs.universe = closed_form_universe(sys.counter, sys.variables);
    cfs.forms.assign(sys.variables.size(), ExpPoly(cfs.universe));
    for (const auto& block : dependency_blocks(sys)) {
        check_deadline();
        const Update& first = sys.updates[block.front()];
        if (block.size() == 1 && first.kind == Update::Kind::RationalScale) {
            const std::string& v = sys.variables[block.front()];
            cfs.forms[block.front()] =
                solve_rational_scale(first.ratio, MultiPoly::variable(cfs.universe, v + "_0"), cfs.universe, v);
            continue;
        }
        std::vector<ExpPoly> solved = solve_block(sys, block, cfs.forms, cfs.universe);
        for (std::size_t i = 0; i < block.size(); ++i) cfs.forms[block[i]] = std::move(solved[i]);
    }
    for (const auto& f : cfs.forms)
        for (const auto& [b, c] : f.terms())
            if (b != 1 && std::find(cfs.bases.begin(), cfs.bases.end(), b) == cfs.bases.end()) cfs.bases.push_back(b);
    std::sort(cfs.bases.begin(), cfs.bases.end());
    return cfs;
}

std::vector<std::string> ClosedFormSystem::render() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < variables.size(); ++i) out.push_back(variables[i] + "(" + counter + ") = " + forms[i].render());
    return out;
}

}  // namespace aligator
