#include "frontend/interp.hpp"

#include "common/error.hpp"

namespace aligator::frontend {

Rational evaluate(const Expr& e, const State& state, long counter) {
    switch (e.kind) {
        case Expr::Kind::Number: return e.value;
        case Expr::Kind::Counter: return Rational(counter);
        case Expr::Kind::Variable: {
            auto it = state.find(e.name);
            if (it == state.end()) {
                throw Error(ErrorKind::Structural, diag::kInvalidArgument, "no value for variable '" + e.name + "'");
            }
            return it->second;
        }
        case Expr::Kind::Neg: return -evaluate(*e.lhs, state, counter);
        case Expr::Kind::Add: return evaluate(*e.lhs, state, counter) + evaluate(*e.rhs, state, counter);
        case Expr::Kind::Sub: return evaluate(*e.lhs, state, counter) - evaluate(*e.rhs, state, counter);
        case Expr::Kind::Mul: return evaluate(*e.lhs, state, counter) * evaluate(*e.rhs, state, counter);
        case Expr::Kind::Div: {
            Rational d = evaluate(*e.rhs, state, counter);
            if (d == 0) throw Error(ErrorKind::Unsupported, diag::kDivisionByZero, "division by zero during execution");
            return evaluate(*e.lhs, state, counter) / d;
        }
    }
    return 0;
}

void execute(const AssignSeq& path, State& state, long counter) {
    for (const auto& a : path) state[a.var] = evaluate(*a.value, state, counter);
}

void execute_stmt(const Stmt& s, State& state, long counter) {
    state[s.target] = evaluate(*s.value, state, counter);
}

}  // namespace aligator::frontend
