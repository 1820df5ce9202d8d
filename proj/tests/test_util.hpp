#pragma once

#include <doctest.h>

#include "poly/groebner.hpp"
#include "poly/multipoly.hpp"
#include "oracles.hpp"

#include <random>
#include <string>
#include <vector>

namespace doctest {
template <>
struct StringMaker<aligator::MultiPoly> {
    static String convert(const aligator::MultiPoly& p) { return aligator::to_string(p).c_str(); }
};
}  // namespace doctest

namespace aligator::testing {

inline UniversePtr universe_of(std::initializer_list<const char*> names) {
    std::vector<VarId> vars;
    for (const char* n : names) vars.push_back(program_var(n));
    return make_universe(std::move(vars));
}

inline MultiPoly P(const UniversePtr& u, const std::string& text) { return parse_polynomial(text, u); }

inline Ideal ideal_of(const UniversePtr& u, std::initializer_list<const char*> gens) {
    std::vector<MultiPoly> ps;
    for (const char* g : gens) ps.push_back(P(u, g));
    return Ideal(u, std::move(ps), canonical_order(*u));
}

using oracles::random_poly;

}  // namespace aligator::testing
