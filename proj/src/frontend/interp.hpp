#pragma once

#include "frontend/flatten.hpp"
#include "poly/rational.hpp"

#include <map>
#include <string>

namespace aligator::frontend {

// Concrete program state: variable name -> value. Variables never assigned
// before being read must be present.
using State = std::map<std::string, Rational>;

// Exact evaluation; `counter` is the value of every counter identifier
// (the number of completed iterations).
Rational evaluate(const Expr& e, const State& state, long counter);

// Runs one path once, assignments in order.
void execute(const AssignSeq& path, State& state, long counter);

// Runs one iteration of the loop body, resolving each If with `choose`,
// which is called with the number of alternatives (2) and returns 0 for the
// then-branch and 1 for the else-branch.
template <class Choose>
void execute_body(const std::vector<Stmt>& body, State& state, long counter, Choose&& choose);

void execute_stmt(const Stmt& s, State& state, long counter);  // Assign only

template <class Choose>
void execute_body(const std::vector<Stmt>& body, State& state, long counter, Choose&& choose) {
    for (const auto& s : body) {
        if (s.kind == Stmt::Kind::Assign) {
            execute_stmt(s, state, counter);
        } else if (s.kind == Stmt::Kind::If) {
            execute_body(choose() == 0 ? s.body : s.else_body, state, counter, choose);
        } else {
            execute_body(s.body, state, counter, choose);
        }
    }
}

}  // namespace aligator::frontend
