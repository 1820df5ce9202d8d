#pragma once

#include "recurrence/extract.hpp"
#include "solve/exppoly.hpp"

#include <string>
#include <vector>

namespace aligator {

struct ClosedFormSystem {
    std::string counter;
    UniversePtr universe;                // counter, then x_0 for each variable
    std::vector<std::string> variables;  // program variables
    std::vector<ExpPoly> forms;          // one per variable
    std::vector<Rational> bases;         // ascending, all bases other than 1

    // "r(n1) = -n1^2-n1*(v(0)-1)+r(0)" per variable.
    std::vector<std::string> render() const;
};

// Universe [counter, x_0, y_0, ...] for the given program variables.
UniversePtr closed_form_universe(const std::string& counter, const std::vector<std::string>& variables);

// Strongly connected components of the "reads" graph, dependencies first.
// Components become available layer by layer; within a layer (and within a
// component) variables keep their index order.
std::vector<std::vector<std::size_t>> dependency_blocks(const RecurrenceSystem& sys);

// Solves y(n+d) = a[d-1]*y(n+d-1) + ... + a[0]*y(n) + g(n) with
// y(k) = initials[k] for k < d. `label` names the variable in diagnostics.
ExpPoly solve_cfinite(const std::vector<Rational>& a, const ExpPoly& g, const std::vector<MultiPoly>& initials,
                      const std::string& label = "y");

// S(n) = e(0) + ... + e(n-1).
ExpPoly sum_exp_poly(const ExpPoly& e);

// Closed forms for one block of mutually dependent affine updates given the
// forms of everything the block reads. `forms` is indexed like sys.variables.
std::vector<ExpPoly> solve_block(const RecurrenceSystem& sys, const std::vector<std::size_t>& block,
                                 const std::vector<ExpPoly>& forms, const UniversePtr& universe);

// v(n+1) = ratio(n)*v(n), v(0) = initial, when the ratio telescopes as
// c*u(n+1)/u(n) with u a polynomial of degree at most 4.
ExpPoly solve_rational_scale(const RatFunc& ratio, const MultiPoly& initial, const UniversePtr& universe,
                             const std::string& label = "v");

ClosedFormSystem closed_forms(const RecurrenceSystem& sys);

}  // namespace aligator
