#pragma once

#include "frontend/ast.hpp"
#include "poly/multipoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aligator {

struct Counterexample {
    std::vector<std::pair<std::string, Rational>> initials;
    std::vector<std::vector<int>> branches;  // per iteration: 0 = then, 1 = else, per If reached
    int step = 0;                            // iterations completed when the polynomial failed
    std::string polynomial;
};

struct Verification {
    int trials = 0;
    int max_steps = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

// Runs the loop body itself (not the recurrences) from random rational
// initial values with uniformly random branch choices, and checks that each
// polynomial of `basis` (over initial and current values) is exactly zero
// after 0, 1, ..., max_steps iterations.
Verification verify_numeric(const frontend::LoopAst& ast, const std::vector<MultiPoly>& basis, int trials,
                            int max_steps, std::uint64_t seed);

// Same, with the basis given as polynomial text over the loop's variables.
Verification verify_numeric(const std::string& source, const std::vector<std::string>& basis, int trials,
                            int max_steps, std::uint64_t seed);

}  // namespace aligator
