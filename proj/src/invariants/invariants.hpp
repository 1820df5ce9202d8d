#pragma once

#include "poly/groebner.hpp"
#include "solve/solve.hpp"

#include <functional>
#include <string>
#include <vector>

namespace aligator {

// Multiplicative relations among exponential sequences theta_i^n, encoded by
// variables t1, t2, ... (one per base).
struct BaseSequenceEnv {
    std::vector<Rational> bases;
    std::vector<std::string> vars;
    std::vector<std::vector<BigInt>> lattice;  // generating set of exponent vectors
    std::vector<MultiPoly> relations;          // lattice ideal over universe `vars`
    UniversePtr universe;
};

// Exponent vectors e with prod theta_i^e_i = 1, via a coprime base of all
// numerators and denominators plus sign parity, and an integer kernel.
// `relations` is the saturated lattice ideal.
BaseSequenceEnv base_relations(const std::vector<Rational>& bases);

// [x_0, y_0, ..., x, y, ...]: the universe of every invariant ideal.
UniversePtr state_universe(const std::vector<std::string>& variables);

// Identity relation <x - x_0 : x>.
Ideal identity_ideal(const UniversePtr& state);

// All polynomial relations between initial and current values that hold
// after every number of iterations of one path.
Ideal path_ideal(const ClosedFormSystem& cfs, const UniversePtr& state);

// Relations of "run I, then J"; `tag` makes the middle variable names unique.
Ideal compose(const Ideal& first, const Ideal& second, const std::string& tag = "m");

struct FixedPointResult {
    Ideal ideal;
    int rounds = 0;
    std::vector<Ideal> history;  // A after each round, starting with the seed
};

// Relations of "reach a state of `first`, then run the path any number of
// times". The path enters through its closed forms rather than its ideal, so
// no spurious points of the path ideal's variety leak into the result.
Ideal compose_closed_form(const Ideal& first, const ClosedFormSystem& cfs, const std::string& tag = "m");

// A := identity; one round composes A with every path in turn; stop when a
// round leaves A unchanged.
FixedPointResult invariant_ideal(const std::vector<ClosedFormSystem>& paths, const UniversePtr& state,
                                 int max_rounds = 50);

}  // namespace aligator
