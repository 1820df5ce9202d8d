#include "frontend/flatten.hpp"

#include <algorithm>

namespace aligator::frontend {

namespace {

void note_variables(const Expr& e, std::vector<std::string>& vars) {
    switch (e.kind) {
        case Expr::Kind::Variable:
            if (std::find(vars.begin(), vars.end(), e.name) == vars.end()) vars.push_back(e.name);
            return;
        case Expr::Kind::Number:
        case Expr::Kind::Counter: return;
        case Expr::Kind::Neg: note_variables(*e.lhs, vars); return;
        default:
            note_variables(*e.lhs, vars);
            note_variables(*e.rhs, vars);
    }
}

void note_block(const std::vector<Stmt>& body, std::vector<std::string>& vars) {
    for (const auto& s : body) {
        switch (s.kind) {
            case Stmt::Kind::Assign:
                if (std::find(vars.begin(), vars.end(), s.target) == vars.end()) vars.push_back(s.target);
                note_variables(*s.value, vars);
                break;
            case Stmt::Kind::If:
                note_block(s.body, vars);
                note_block(s.else_body, vars);
                break;
            case Stmt::Kind::While: note_block(s.body, vars); break;
        }
    }
}

std::vector<AssignSeq> paths_of(const std::vector<Stmt>& body) {
    std::vector<AssignSeq> acc{AssignSeq{}};
    for (const auto& s : body) {
        if (s.kind == Stmt::Kind::Assign) {
            for (auto& p : acc) p.push_back({s.target, s.value});
            continue;
        }
        std::vector<AssignSeq> alternatives = paths_of(s.body);
        if (s.kind == Stmt::Kind::If) {
            auto other = paths_of(s.else_body);
            alternatives.insert(alternatives.end(), other.begin(), other.end());
        }
        std::vector<AssignSeq> next;
        next.reserve(acc.size() * alternatives.size());
        for (const auto& prefix : acc) {
            for (const auto& alt : alternatives) {
                AssignSeq p = prefix;
                p.insert(p.end(), alt.begin(), alt.end());
                next.push_back(std::move(p));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

PathSystem flatten(const LoopAst& ast) {
    PathSystem ps;
    const auto& body = ast.loop().body;
    note_block(body, ps.variables);
    ps.paths = paths_of(body);
    return ps;
}

}  // namespace aligator::frontend
