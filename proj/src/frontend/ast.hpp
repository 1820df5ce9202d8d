#pragma once

#include "poly/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace aligator::frontend {

struct SourceLoc {
    int line = 0;
    int column = 0;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Right-hand side expression tree. Counter nodes are the reserved loop
// counter identifiers (n1, n2, ...) and denote the number of completed
// iterations.
struct Expr {
    enum class Kind { Number, Variable, Counter, Neg, Add, Sub, Mul, Div };

    Kind kind;
    Rational value;    // Number
    std::string name;  // Variable, Counter
    ExprPtr lhs, rhs;  // Neg uses lhs only
    SourceLoc loc;

    static ExprPtr number(Rational v, SourceLoc loc = {});
    static ExprPtr variable(std::string name, SourceLoc loc = {});
    static ExprPtr counter(std::string name, SourceLoc loc = {});
    static ExprPtr unary_minus(ExprPtr operand, SourceLoc loc = {});
    static ExprPtr binary(Kind kind, ExprPtr lhs, ExprPtr rhs, SourceLoc loc = {});
};

bool equal(const Expr& a, const Expr& b);  // structural, ignores locations

struct Stmt {
    enum class Kind { Assign, If, While };

    Kind kind = Kind::Assign;
    std::string target;  // Assign
    ExprPtr value;       // Assign
    std::string guard;   // If, While: normalized guard text; no semantics
    std::vector<Stmt> body;       // While body, If then-branch
    std::vector<Stmt> else_body;  // If
    bool has_else = false;
    SourceLoc loc;
};

bool equal(const Stmt& a, const Stmt& b);

// A parsed loop program: exactly one top-level while statement.
struct LoopAst {
    std::vector<Stmt> body;

    const Stmt& loop() const { return body.front(); }
};

bool equal(const LoopAst& a, const LoopAst& b);

std::string print(const Expr& e);
std::string print(const LoopAst& ast);

}  // namespace aligator::frontend
