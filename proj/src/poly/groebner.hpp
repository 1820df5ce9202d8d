#pragma once

#include "poly/multipoly.hpp"

#include <span>
#include <string>
#include <vector>

namespace aligator {

// A finitely generated ideal of Q[universe]. When `reduced()` is true the
// generators are the reduced Gröbner basis under `order()`: monic, sorted by
// descending leading monomial, and mutually irreducible.
class Ideal {
public:
    Ideal(UniversePtr universe, std::vector<MultiPoly> generators, MonomialOrder order, bool reduced = false);

    static Ideal zero(UniversePtr universe);
    static Ideal unit(UniversePtr universe);

    const UniversePtr& universe() const noexcept { return universe_; }
    const std::vector<MultiPoly>& generators() const noexcept { return generators_; }
    const MonomialOrder& order() const noexcept { return order_; }
    bool reduced() const noexcept { return reduced_; }

    bool is_zero() const noexcept { return generators_.empty(); }
    bool is_unit() const;

private:
    UniversePtr universe_;
    std::vector<MultiPoly> generators_;
    MonomialOrder order_;
    bool reduced_;
};

// Multivariate division remainder of p by G (in the given generator order).
MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly> divisors, const MonomialOrder& order);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

// Reduced Gröbner basis of <gens>. Buchberger's algorithm with the
// Gebauer-Möller installation of both criteria, interreduced inputs, the
// normal selection strategy (smallest lcm first) and full reduction with the
// smallest applicable leading monomial.
Ideal buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order);
Ideal buchberger(const UniversePtr& universe, std::span<const MultiPoly> gens, const MonomialOrder& order);

// Lex over the universe sequence: the order in which ideals are compared and
// stored between pipeline stages. Printing uses the polynomial storage order.
MonomialOrder canonical_order(const Universe& universe);

// Reduced Gröbner basis of `ideal` under the canonical order.
Ideal canonicalize(const Ideal& ideal);

// I ∩ Q[universe \ kill]. The result lives over the remaining variables (in
// their original relative order) and is reduced under the canonical order.
Ideal eliminate(const Ideal& ideal, std::span<const std::string> kill);

// I ∩ J via t·I + (1 − t)·J and elimination of t.
Ideal intersect(const Ideal& a, const Ideal& b);

bool ideal_equal(const Ideal& a, const Ideal& b);

bool ideal_contains(const Ideal& ideal, const MultiPoly& p);

// Every generator of `inner` belongs to `outer`.
bool ideal_subset(const Ideal& inner, const Ideal& outer);

// Moves an ideal into a larger (or permuted) universe, matching names.
Ideal embed(const Ideal& ideal, const UniversePtr& target);

}  // namespace aligator
