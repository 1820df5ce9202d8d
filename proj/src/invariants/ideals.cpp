#include "invariants/invariants.hpp"

#include "common/deadline.hpp"
#include "common/error.hpp"

#include <set>

namespace aligator {

UniversePtr state_universe(const std::vector<std::string>& variables) {
    std::vector<VarId> vars;
    for (const auto& v : variables) vars.push_back(initial_var(v));
    for (const auto& v : variables) vars.push_back(program_var(v));
    return make_universe(std::move(vars));
}

Ideal identity_ideal(const UniversePtr& state) {
    std::vector<MultiPoly> gens;
    for (const auto& v : state->vars()) {
        if (v.kind != VarKind::Program) continue;
        gens.push_back(MultiPoly::variable(state, v.name) - MultiPoly::variable(state, v.name + "_0"));
    }
    return canonicalize(Ideal(state, std::move(gens), canonical_order(*state)));
}

namespace {

std::string delta_var(long j) { return "z__" + std::to_string(j); }

struct Parametric {
    UniversePtr universe;
    std::vector<MultiPoly> gens;
    std::vector<std::string> kill;
};

// Generators x - f_x(n, t, z; initials) for every variable together with the
// relations that tie n, t and z together. `front` variables are placed before
// the counter and `initial` renames the initial values used by the forms.
Parametric parametrize(const ClosedFormSystem& cfs, const UniversePtr& state, std::vector<VarId> front,
                       const std::function<std::string(const std::string&)>& initial) {
    BaseSequenceEnv env = base_relations(cfs.bases);
    long max_delta = -1;
    for (const auto& f : cfs.forms)
        if (!f.deltas().empty()) max_delta = std::max(max_delta, f.deltas().rbegin()->first);

    Parametric out;
    std::vector<VarId> vars = std::move(front);
    for (const auto& v : vars) out.kill.push_back(v.name);
    vars.push_back(VarId{cfs.counter, VarKind::Counter});
    out.kill.push_back(cfs.counter);
    for (const auto& t : env.vars) {
        vars.push_back(VarId{t, VarKind::BaseSequence});
        out.kill.push_back(t);
    }
    for (long j = 0; j <= max_delta; ++j) {
        vars.push_back(auxiliary_var(delta_var(j)));
        out.kill.push_back(delta_var(j));
    }
    for (const auto& v : state->vars()) vars.push_back(v);
    UniversePtr u = make_universe(std::move(vars));
    out.universe = u;

    auto base_factor = [&](const Rational& b) {
        if (b == 1) return MultiPoly::constant(u, 1);
        for (std::size_t i = 0; i < env.bases.size(); ++i)
            if (env.bases[i] == b) return MultiPoly::variable(u, env.vars[i]);
        throw Error(ErrorKind::Structural, diag::kInvalidArgument, "closed form uses an unlisted base");
    };
    auto lift = [&](const MultiPoly& c) {
        return c.rebase(u, [&](const std::string& name) { return name == cfs.counter ? name : initial(name); });
    };

    std::vector<MultiPoly> gens;
    for (std::size_t i = 0; i < cfs.variables.size(); ++i) {
        const ExpPoly& f = cfs.forms[i];
        MultiPoly rhs(u);
        for (const auto& [b, c] : f.terms()) rhs += lift(c) * base_factor(b);
        for (const auto& [j, d] : f.deltas()) rhs += lift(d) * MultiPoly::variable(u, delta_var(j));
        gens.push_back((MultiPoly::variable(u, cfs.variables[i]) - rhs).primitive());
    }
    for (const auto& r : env.relations) gens.push_back(r.rebase(u));

    MultiPoly n = MultiPoly::variable(u, cfs.counter);
    for (long j = 0; j <= max_delta; ++j) {
        MultiPoly z = MultiPoly::variable(u, delta_var(j));
        gens.push_back(z * z - z);
        gens.push_back(z * (n - MultiPoly::constant(u, Rational(j))));
        for (long k = j + 1; k <= max_delta; ++k) gens.push_back(z * MultiPoly::variable(u, delta_var(k)));
        for (std::size_t i = 0; i < env.bases.size(); ++i) {
            gens.push_back(z * (MultiPoly::variable(u, env.vars[i]) - MultiPoly::constant(u, pow(env.bases[i], j))));
        }
    }

    out.gens = std::move(gens);
    return out;
}

}  // namespace

Ideal path_ideal(const ClosedFormSystem& cfs, const UniversePtr& state) {
    Parametric p = parametrize(cfs, state, {}, [](const std::string& name) { return name; });
    Ideal eliminated = eliminate(Ideal(p.universe, std::move(p.gens), canonical_order(*p.universe)), p.kill);
    return embed(eliminated, state);
}

Ideal compose_closed_form(const Ideal& first, const ClosedFormSystem& cfs, const std::string& tag) {
    const UniversePtr& state = first.universe();
    std::set<std::string> program;
    std::vector<VarId> middle;
    for (const auto& v : state->vars()) {
        if (v.kind != VarKind::Program) continue;
        program.insert(v.name);
        middle.push_back(auxiliary_var(v.name + "__" + tag));
    }
    Parametric p = parametrize(cfs, state, std::move(middle), [&](const std::string& name) {
        auto v = program_name_of_initial(name);
        return v && program.count(*v) ? *v + "__" + tag : name;
    });
    for (const auto& g : first.generators()) {
        p.gens.push_back(g.rebase(p.universe, [&](const std::string& name) {
            return program.count(name) ? name + "__" + tag : name;
        }));
    }
    return embed(eliminate(Ideal(p.universe, std::move(p.gens), canonical_order(*p.universe)), p.kill), state);
}

Ideal compose(const Ideal& first, const Ideal& second, const std::string& tag) {
    if (!same_universe(first.universe(), second.universe())) {
        throw Error(ErrorKind::Structural, diag::kUniverseMismatch, "compose needs ideals over one universe");
    }
    const UniversePtr& state = first.universe();
    std::set<std::string> program;
    std::vector<VarId> vars;
    std::vector<std::string> kill;
    for (const auto& v : state->vars()) {
        if (v.kind != VarKind::Program) continue;
        program.insert(v.name);
        vars.push_back(auxiliary_var(v.name + "__" + tag));
        kill.push_back(vars.back().name);
    }
    for (const auto& v : state->vars()) vars.push_back(v);
    UniversePtr u = make_universe(std::move(vars));

    std::vector<MultiPoly> gens;
    for (const auto& g : first.generators()) {
        gens.push_back(g.rebase(u, [&](const std::string& name) {
            return program.count(name) ? name + "__" + tag : name;
        }));
    }
    for (const auto& g : second.generators()) {
        gens.push_back(g.rebase(u, [&](const std::string& name) {
            auto p = program_name_of_initial(name);
            return p && program.count(*p) ? *p + "__" + tag : name;
        }));
    }
    return embed(eliminate(Ideal(u, std::move(gens), canonical_order(*u)), kill), state);
}

FixedPointResult invariant_ideal(const std::vector<ClosedFormSystem>& paths, const UniversePtr& state,
                                  int max_rounds) {
    if (paths.empty()) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "no paths");
    FixedPointResult result{identity_ideal(state), 0, {}};
    result.history.push_back(result.ideal);
    if (paths.size() == 1) {
        // At n = 0 every closed form is the identity, so P is already inside
        // the identity ideal and id ∩ P = P.
        result.ideal = path_ideal(paths[0], state);
        result.rounds = 1;
        result.history.push_back(result.ideal);
        return result;
    }
    for (int round = 1; round <= max_rounds; ++round) {
        check_deadline();
        // Composition never loses the n = 0 states, so each step shrinks the
        // ideal. A round that changes nothing means A is closed under every
        // path, which is the fixed point A = A ∩ ⋂_p compose(A, p).
        Ideal next = result.ideal;
        for (std::size_t k = 0; k < paths.size(); ++k) {
            next = compose_closed_form(next, paths[k], "m" + std::to_string(round) + "_" + std::to_string(k + 1));
        }
        result.history.push_back(next);
        result.rounds = round;
        bool fixed = ideal_equal(next, result.ideal);
        result.ideal = std::move(next);
        if (fixed) return result;
    }
    throw Error(ErrorKind::NonTermination, diag::kNonTermination,
                "invariant ideal did not stabilize within " + std::to_string(max_rounds) + " rounds");
}

}  // namespace aligator
