#include "frontend/ast.hpp"

namespace aligator::frontend {

ExprPtr Expr::number(Rational v, SourceLoc loc) {
    return std::make_shared<const Expr>(Expr{Kind::Number, std::move(v), {}, nullptr, nullptr, loc});
}

ExprPtr Expr::variable(std::string name, SourceLoc loc) {
    return std::make_shared<const Expr>(Expr{Kind::Variable, 0, std::move(name), nullptr, nullptr, loc});
}

ExprPtr Expr::counter(std::string name, SourceLoc loc) {
    return std::make_shared<const Expr>(Expr{Kind::Counter, 0, std::move(name), nullptr, nullptr, loc});
}

ExprPtr Expr::unary_minus(ExprPtr operand, SourceLoc loc) {
    return std::make_shared<const Expr>(Expr{Kind::Neg, 0, {}, std::move(operand), nullptr, loc});
}

ExprPtr Expr::binary(Kind kind, ExprPtr lhs, ExprPtr rhs, SourceLoc loc) {
    return std::make_shared<const Expr>(Expr{kind, 0, {}, std::move(lhs), std::move(rhs), loc});
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Number: return a.value == b.value;
        case Expr::Kind::Variable:
        case Expr::Kind::Counter: return a.name == b.name;
        case Expr::Kind::Neg: return equal(*a.lhs, *b.lhs);
        default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    }
}

namespace {

bool equal_list(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!equal(a[i], b[i])) return false;
    }
    return true;
}

}  // namespace

bool equal(const Stmt& a, const Stmt& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Stmt::Kind::Assign: return a.target == b.target && equal(*a.value, *b.value);
        case Stmt::Kind::If:
            return a.guard == b.guard && a.has_else == b.has_else && equal_list(a.body, b.body) &&
                   equal_list(a.else_body, b.else_body);
        case Stmt::Kind::While: return a.guard == b.guard && equal_list(a.body, b.body);
    }
    return false;
}

bool equal(const LoopAst& a, const LoopAst& b) { return equal_list(a.body, b.body); }

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        default: return 4;
    }
}

// Literals in the AST come from integer or decimal source text, so their
// denominators have only the prime factors 2 and 5.
std::string print_number(const Rational& q) {
    if (is_integer(q)) return to_string(q);
    BigInt num = q.get_num(), den = q.get_den();
    bool negative = num < 0;
    if (negative) num = -num;
    int digits = 0;
    BigInt scale = 1;
    while (scale % den != 0 && digits < 64) {
        scale *= 10;
        ++digits;
    }
    if (scale % den != 0) return "(" + to_string(q) + ")";
    BigInt scaled = num * (scale / den);
    std::string s = scaled.get_str();
    if (int(s.size()) <= digits) s = std::string(std::size_t(digits - int(s.size()) + 1), '0') + s;
    s.insert(s.size() - std::size_t(digits), ".");
    return (negative ? "-" : "") + s;
}

std::string print_expr(const Expr& e, int parent_prec, bool right_operand) {
    std::string out;
    int prec = precedence(e.kind);
    switch (e.kind) {
        case Expr::Kind::Number: out = print_number(e.value); break;
        case Expr::Kind::Variable:
        case Expr::Kind::Counter: out = e.name; break;
        case Expr::Kind::Neg: out = "-" + print_expr(*e.lhs, prec, false); break;
        case Expr::Kind::Add: out = print_expr(*e.lhs, prec, false) + " + " + print_expr(*e.rhs, prec, true); break;
        case Expr::Kind::Sub: out = print_expr(*e.lhs, prec, false) + " - " + print_expr(*e.rhs, prec, true); break;
        case Expr::Kind::Mul: out = print_expr(*e.lhs, prec, false) + "*" + print_expr(*e.rhs, prec, true); break;
        case Expr::Kind::Div: out = print_expr(*e.lhs, prec, false) + "/" + print_expr(*e.rhs, prec, true); break;
    }
    bool negative_literal = e.kind == Expr::Kind::Number && e.value < 0;
    if (prec < parent_prec || (right_operand && prec == parent_prec) || (negative_literal && parent_prec > 1)) {
        return "(" + out + ")";
    }
    return out;
}

void print_block(const std::vector<Stmt>& body, int indent, std::string& out) {
    std::string pad(std::size_t(indent) * 4, ' ');
    for (const auto& s : body) {
        switch (s.kind) {
            case Stmt::Kind::Assign: out += pad + s.target + " = " + print(*s.value) + "\n"; break;
            case Stmt::Kind::If:
                out += pad + "if " + s.guard + "\n";
                print_block(s.body, indent + 1, out);
                if (s.has_else) {
                    out += pad + "else\n";
                    print_block(s.else_body, indent + 1, out);
                }
                out += pad + "end\n";
                break;
            case Stmt::Kind::While:
                out += pad + "while " + s.guard + "\n";
                print_block(s.body, indent + 1, out);
                out += pad + "end\n";
                break;
        }
    }
}

}  // namespace

std::string print(const Expr& e) { return print_expr(e, 0, false); }

std::string print(const LoopAst& ast) {
    std::string out;
    print_block(ast.body, 0, out);
    return out;
}

}  // namespace aligator::frontend
