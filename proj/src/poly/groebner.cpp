#include "poly/groebner.hpp"

#include "common/deadline.hpp"
#include "common/error.hpp"

#include <algorithm>
#include <numeric>

namespace aligator {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(UniversePtr universe, std::vector<MultiPoly> generators, MonomialOrder order, bool reduced)
    : universe_(std::move(universe)), generators_(std::move(generators)), order_(order), reduced_(reduced) {
    for (const auto& g : generators_) {
        if (!same_universe(g.universe(), universe_)) {
            throw Error(ErrorKind::Structural, diag::kUniverseMismatch, "ideal generator over a foreign universe");
        }
    }
    std::erase_if(generators_, [](const MultiPoly& g) { return g.is_zero(); });
    if (order_.nvars() != universe_->size()) {
        throw Error(ErrorKind::Structural, diag::kInvalidArgument, "monomial order does not match universe size");
    }
}

Ideal Ideal::zero(UniversePtr universe) {
    auto order = canonical_order(*universe);
    return Ideal(std::move(universe), {}, order, true);
}

Ideal Ideal::unit(UniversePtr universe) {
    auto order = canonical_order(*universe);
    auto one = MultiPoly::constant(universe, 1);
    return Ideal(std::move(universe), {one}, order, true);
}

bool Ideal::is_unit() const {
    if (reduced_) return generators_.size() == 1 && generators_.front().is_constant();
    return canonicalize(*this).is_unit();
}

MonomialOrder canonical_order(const Universe& universe) { return MonomialOrder::lex(universe.size()); }

// ---------------------------------------------------------------------------
// Ordered working polynomials

namespace {

// Terms sorted by descending monomial under the working order.
using Terms = std::vector<Term>;

Terms to_terms(const MultiPoly& p, const MonomialOrder& order) {
    Terms t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return t;
}

MultiPoly to_poly(const UniversePtr& u, Terms terms) { return MultiPoly::from_terms(u, std::move(terms)); }

void make_monic(Terms& t) {
    if (t.empty() || t.front().coeff == 1) return;
    Rational inv = Rational(1) / t.front().coeff;
    for (auto& term : t) term.coeff *= inv;
}

// out = a[from_a..] - c * m * b[from_b..], both descending. Consumes the
// terms of `a`; `out` is cleared first so callers can recycle its storage.
void sub_mul(Terms& a, std::size_t from_a, const Rational& c, const Monomial& m, const Terms& b, std::size_t from_b,
             const MonomialOrder& order, Terms& out) {
    out.clear();
    out.reserve((a.size() - from_a) + (b.size() - from_b));
    std::size_t i = from_a, j = from_b;
    Monomial mj;
    bool have_mj = false;
    Rational prod;
    while (i < a.size() && j < b.size()) {
        if (!have_mj) {
            mj = b[j].mono * m;
            have_mj = true;
        }
        int cmp = order.compare(a[i].mono, mj);
        if (cmp > 0) {
            out.push_back(std::move(a[i++]));
        } else if (cmp < 0) {
            prod = c * b[j].coeff;
            out.push_back({mj, -prod});
            ++j;
            have_mj = false;
        } else {
            prod = c * b[j].coeff;
            a[i].coeff -= prod;
            if (a[i].coeff != 0) out.push_back(std::move(a[i]));
            ++i;
            ++j;
            have_mj = false;
        }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back({b[j].mono * m, -(c * b[j].coeff)});
}

struct Basis {
    std::vector<Terms> polys;   // monic, descending
    std::vector<bool> active;   // participates in reduction
};

const Terms* find_divisor(const Monomial& m, const std::vector<const Terms*>& divisors) {
    for (const Terms* g : divisors) {
        if (g->front().mono.divides(m)) return g;
    }
    return nullptr;
}

// Full reduction of p by the divisor list (leading and tail terms).
Terms reduce_full(Terms p, const std::vector<const Terms*>& divisors, const MonomialOrder& order) {
    Terms remainder, scratch;
    std::size_t head = 0;
    std::size_t steps = 0;
    while (head < p.size()) {
        if ((++steps & 0xFF) == 0) check_deadline();
        const Term& lt = p[head];
        const Terms* g = find_divisor(lt.mono, divisors);
        if (!g) {
            remainder.push_back(std::move(p[head]));
            ++head;
            continue;
        }
        Rational c = lt.coeff / g->front().coeff;
        Monomial m = lt.mono / g->front().mono;
        sub_mul(p, head + 1, c, m, *g, 1, order, scratch);
        std::swap(p, scratch);
        head = 0;
    }
    return remainder;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
};

class BuchbergerRun {
public:
    explicit BuchbergerRun(const MonomialOrder& order) : order_(order) {}

    // Inputs are expected interreduced and monic; they are installed as is.
    void add_input(Terms f) { install(std::move(f)); }

    void run() {
        while (!pairs_.empty()) {
            check_deadline();
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k) {
                const Pair& a = pairs_[k];
                const Pair& b = pairs_[best];
                int c = order_.compare(a.lcm, b.lcm);
                if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
            }
            Pair p = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();

            Terms s = spoly(basis_.polys[p.i], basis_.polys[p.j], p.lcm);
            Terms h = reduce_full(std::move(s), active_divisors(), order_);
            if (h.empty()) continue;
            make_monic(h);
            install(std::move(h));
        }
    }

    // Reduced basis, descending by leading monomial.
    std::vector<Terms> reduced() const {
        std::vector<Terms> minimal;
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < basis_.polys.size(); ++k) {
            if (basis_.active[k]) idx.push_back(k);
        }
        for (std::size_t a : idx) {
            const Monomial& lm = basis_.polys[a].front().mono;
            bool redundant = false;
            for (std::size_t b : idx) {
                if (a == b) continue;
                const Monomial& other = basis_.polys[b].front().mono;
                if (other.divides(lm) && (!(other == lm) || b < a)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) minimal.push_back(basis_.polys[a]);
        }
        std::sort(minimal.begin(), minimal.end(),
                  [&](const Terms& x, const Terms& y) { return order_.greater(x.front().mono, y.front().mono); });
        std::vector<Terms> out;
        out.reserve(minimal.size());
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<const Terms*> others;
            for (std::size_t l = 0; l < minimal.size(); ++l) {
                if (l != k) others.push_back(&minimal[l]);
            }
            Terms tail(minimal[k].begin() + 1, minimal[k].end());
            Terms reduced_tail = reduce_full(std::move(tail), others, order_);
            Terms g;
            g.reserve(reduced_tail.size() + 1);
            g.push_back(minimal[k].front());
            for (auto& t : reduced_tail) g.push_back(std::move(t));
            make_monic(g);
            out.push_back(std::move(g));
        }
        return out;
    }

private:
    std::vector<const Terms*> active_divisors() const {
        std::vector<const Terms*> d;
        for (std::size_t k = 0; k < basis_.polys.size(); ++k) {
            if (basis_.active[k]) d.push_back(&basis_.polys[k]);
        }
        // Smallest leading monomial first: the simplest reducer wins.
        std::stable_sort(d.begin(), d.end(), [&](const Terms* a, const Terms* b) {
            return order_.less(a->front().mono, b->front().mono);
        });
        return d;
    }

    Terms spoly(const Terms& f, const Terms& g, const Monomial& lcm) const {
        Monomial mf = lcm / f.front().mono;
        Monomial mg = lcm / g.front().mono;
        Terms left;
        left.reserve(f.size());
        for (std::size_t k = 1; k < f.size(); ++k) left.push_back({f[k].mono * mf, f[k].coeff});
        Terms out;
        sub_mul(left, 0, Rational(1), mg, g, 1, order_, out);
        return out;
    }

    // Gebauer-Möller update with the new basis element h.
    void install(Terms h) {
        const std::size_t hi = basis_.polys.size();
        const Monomial lh = h.front().mono;
        basis_.polys.push_back(std::move(h));
        basis_.active.push_back(true);

        std::vector<Pair> candidates;
        for (std::size_t k = 0; k < hi; ++k) {
            if (!basis_.active[k]) continue;
            candidates.push_back({k, hi, basis_.polys[k].front().mono.lcm(lh)});
        }

        // Chain criterion among the new pairs: drop (k, h) when another new
        // pair's lcm properly divides it; among equal lcms keep one.
        auto coprime_with_h = [&](const Pair& p) { return basis_.polys[p.i].front().mono.coprime(lh); };
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < candidates.size() && !drop; ++b) {
                if (a == b) continue;
                const Monomial& la = candidates[a].lcm;
                const Monomial& lb = candidates[b].lcm;
                if (lb.divides(la)) {
                    if (!(lb == la)) {
                        drop = true;
                    } else {
                        // Equal lcms: keep a coprime representative if any,
                        // otherwise the lowest index.
                        bool ca = coprime_with_h(candidates[a]);
                        bool cb = coprime_with_h(candidates[b]);
                        if (cb && !ca) drop = true;
                        else if (ca == cb && b < a) drop = true;
                    }
                }
            }
            if (!drop) kept.push_back(candidates[a]);
        }
        // Coprime leading monomials: the S-polynomial reduces to zero.
        std::erase_if(kept, coprime_with_h);

        // Old pairs made redundant by h.
        std::erase_if(pairs_, [&](const Pair& p) {
            if (!lh.divides(p.lcm)) return false;
            Monomial li = basis_.polys[p.i].front().mono.lcm(lh);
            Monomial lj = basis_.polys[p.j].front().mono.lcm(lh);
            return !(li == p.lcm) && !(lj == p.lcm);
        });
        for (auto& p : kept) pairs_.push_back(std::move(p));

        for (std::size_t k = 0; k < hi; ++k) {
            if (basis_.active[k] && lh.divides(basis_.polys[k].front().mono)) basis_.active[k] = false;
        }
    }

    MonomialOrder order_;
    Basis basis_;
    std::vector<Pair> pairs_;
};

void require_order_fits(const UniversePtr& u, const MonomialOrder& order) {
    if (order.nvars() != u->size()) {
        throw Error(ErrorKind::Structural, diag::kInvalidArgument, "monomial order does not match universe size");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations

MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> divisors, const MonomialOrder& order) {
    require_order_fits(p.universe(), order);
    std::vector<Terms> ordered;
    ordered.reserve(divisors.size());
    for (const auto& g : divisors) {
        require_same_universe(p, g);
        if (g.is_zero()) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "zero divisor in normal_form");
        ordered.push_back(to_terms(g, order));
    }
    std::vector<const Terms*> ptrs;
    for (const auto& t : ordered) ptrs.push_back(&t);
    return to_poly(p.universe(), reduce_full(to_terms(p, order), ptrs, order));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order) {
    require_same_universe(f, g);
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Monomial l = lf.mono.lcm(lg.mono);
    MultiPoly a = f.multiply_monomial(l / lf.mono, Rational(1) / lf.coeff);
    MultiPoly b = g.multiply_monomial(l / lg.mono, Rational(1) / lg.coeff);
    return a - b;
}

Ideal buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order) {
    if (gens.empty()) {
        throw Error(ErrorKind::Structural, diag::kInvalidArgument, "buchberger needs a universe; use the overload");
    }
    return buchberger(gens.front().universe(), gens, order);
}

Ideal buchberger(const UniversePtr& universe, std::span<const MultiPoly> gens, const MonomialOrder& order) {
    require_order_fits(universe, order);
    std::vector<Terms> inputs;
    for (const auto& g : gens) {
        if (!same_universe(g.universe(), universe)) {
            throw Error(ErrorKind::Structural, diag::kUniverseMismatch, "generator over a foreign universe");
        }
        if (g.is_zero()) continue;
        inputs.push_back(to_terms(g, order));
    }
    // Reduce every input by the ones before it until nothing changes, then
    // install smallest leading monomial first.
    for (;;) {
        check_deadline();
        std::vector<Terms> next;
        for (const auto& f : inputs) {
            std::vector<const Terms*> earlier;
            for (const auto& g : next) earlier.push_back(&g);
            Terms r = reduce_full(f, earlier, order);
            if (r.empty()) continue;
            make_monic(r);
            next.push_back(std::move(r));
        }
        bool stable = next == inputs;
        inputs = std::move(next);
        if (stable) break;
    }
    std::stable_sort(inputs.begin(), inputs.end(),
                     [&](const Terms& a, const Terms& b) { return order.less(a.front().mono, b.front().mono); });
    BuchbergerRun run(order);
    for (auto& f : inputs) run.add_input(std::move(f));
    run.run();
    std::vector<MultiPoly> out;
    for (auto& t : run.reduced()) out.push_back(to_poly(universe, std::move(t)));
    return Ideal(universe, std::move(out), order, true);
}

Ideal canonicalize(const Ideal& ideal) {
    auto order = canonical_order(*ideal.universe());
    if (ideal.reduced() && ideal.order() == order) return ideal;
    return buchberger(ideal.universe(), ideal.generators(), order);
}

Ideal embed(const Ideal& ideal, const UniversePtr& target) {
    std::vector<MultiPoly> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(g.rebase(target));
    // A reduced basis stays reduced when the variable sequence is unchanged.
    auto order = canonical_order(*target);
    bool reduced = ideal.reduced() && *ideal.universe() == *target && ideal.order() == order;
    return Ideal(target, std::move(gens), order, reduced);
}

Ideal eliminate(const Ideal& ideal, std::span<const std::string> kill) {
    const Universe& u = *ideal.universe();
    std::vector<VarId> front, rest;
    for (const auto& name : kill) {
        u.require(name);
    }
    for (const auto& v : u.vars()) {
        bool killed = std::find(kill.begin(), kill.end(), v.name) != kill.end();
        (killed ? front : rest).push_back(v);
    }
    auto rest_universe = make_universe(rest);
    if (front.empty()) return canonicalize(embed(ideal, rest_universe));
    const std::size_t block = front.size();
    std::vector<VarId> all = front;
    all.insert(all.end(), rest.begin(), rest.end());
    auto work_universe = make_universe(std::move(all));

    std::vector<MultiPoly> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.rebase(work_universe));

    // A generator c*v + f with constant c and v not in f pins v down; drop it
    // and substitute v = -f/c into the rest. Exact, and much cheaper than
    // leaving v to Buchberger.
    for (bool progress = true; progress;) {
        progress = false;
        std::size_t best_gen = 0, best_var = 0, best_size = 0;
        for (std::size_t k = 0; k < block; ++k) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (gens[i].degree_in(k) != 1) continue;
                auto parts = gens[i].coefficients_in(k);
                if (!parts[1].is_constant()) continue;
                if (!progress || parts[0].size() < best_size) {
                    progress = true;
                    best_gen = i;
                    best_var = k;
                    best_size = parts[0].size();
                }
            }
        }
        if (!progress) break;
        check_deadline();
        auto parts = gens[best_gen].coefficients_in(best_var);
        MultiPoly value = parts[0] * Rational(-1 / parts[1].constant_term());
        std::vector<MultiPoly> rest_gens;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i == best_gen) continue;
            MultiPoly g = gens[i].mentions(best_var) ? gens[i].substitute(best_var, value).primitive() : gens[i];
            if (!g.is_zero()) rest_gens.push_back(std::move(g));
        }
        gens = std::move(rest_gens);
    }
    Ideal gb = buchberger(work_universe, gens, MonomialOrder::block_lex(work_universe->size(), block));

    std::vector<MultiPoly> kept;
    for (const auto& g : gb.generators()) {
        bool mentions_killed = false;
        for (std::size_t k = 0; k < block && !mentions_killed; ++k) mentions_killed = g.mentions(k);
        if (!mentions_killed) kept.push_back(g.rebase(rest_universe));
    }
    // The surviving elements are the reduced basis of the elimination ideal
    // under the restriction of the block order, i.e. lex on the rest.
    return Ideal(rest_universe, std::move(kept), canonical_order(*rest_universe), true);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (!same_universe(a.universe(), b.universe())) {
        throw Error(ErrorKind::Structural, diag::kUniverseMismatch, "intersect: ideals over different universes");
    }
    const auto& u = a.universe();
    if (a.is_zero() || b.is_zero()) return Ideal::zero(u);

    std::string tname = "t__cap";
    while (u->contains(tname)) tname += "_";
    std::vector<VarId> vars{auxiliary_var(tname)};
    vars.insert(vars.end(), u->vars().begin(), u->vars().end());
    auto work = make_universe(std::move(vars));

    auto t = MultiPoly::variable(work, std::size_t{0});
    auto one_minus_t = MultiPoly::constant(work, 1) - t;
    std::vector<MultiPoly> gens;
    for (const auto& g : a.generators()) gens.push_back(t * g.rebase(work));
    for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.rebase(work));
    Ideal joint(work, std::move(gens), canonical_order(*work));
    Ideal result = eliminate(joint, std::vector<std::string>{tname});
    // eliminate() keeps the relative order of the remaining variables, which
    // is exactly u; rebase onto the caller's universe pointer.
    return Ideal(u, embed(result, u).generators(), canonical_order(*u), true);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!same_universe(a.universe(), b.universe())) {
        throw Error(ErrorKind::Structural, diag::kUniverseMismatch, "ideal_equal: ideals over different universes");
    }
    Ideal ca = canonicalize(a);
    Ideal cb = canonicalize(b);
    return ca.generators() == cb.generators();
}

bool ideal_contains(const Ideal& ideal, const MultiPoly& p) {
    if (!same_universe(ideal.universe(), p.universe())) {
        throw Error(ErrorKind::Structural, diag::kUniverseMismatch, "membership test over different universes");
    }
    if (p.is_zero()) return true;
    if (ideal.is_zero()) return false;
    Ideal gb = ideal.reduced() ? ideal : canonicalize(ideal);
    return normal_form(p, gb.generators(), gb.order()).is_zero();
}

bool ideal_subset(const Ideal& inner, const Ideal& outer) {
    if (inner.is_zero()) return true;
    Ideal gb = outer.reduced() ? outer : canonicalize(outer);
    for (const auto& g : inner.generators()) {
        if (!ideal_contains(gb, g)) return false;
    }
    return true;
}

}  // namespace aligator
