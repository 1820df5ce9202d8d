#include "frontend/parser.hpp"

#include "common/error.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace aligator::frontend {

namespace {

bool digits_only(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

bool is_counter_identifier(std::string_view name) { return name.size() > 1 && name[0] == 'n' && digits_only(name.substr(1)); }

bool is_reserved_identifier(std::string_view name) {
    if (name.size() > 2 && name.substr(name.size() - 2) == "_0") return true;
    if (name.size() > 1 && name[0] == 't' && digits_only(name.substr(1))) return true;
    if (is_counter_identifier(name)) return true;
    return name.find("__") != std::string_view::npos;
}

namespace {

enum class Tok { Ident, Number, Op, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    SourceLoc loc;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            SourceLoc loc{line_, col_};
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", loc});
                return out;
            }
            char c = src_[pos_];
            if (c == '\n') {
                advance();
                out.push_back({Tok::Newline, "\\n", loc});
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    advance();
                out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), loc});
            } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                       (c == '.' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
                std::size_t start = pos_;
                bool seen_point = false;
                while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                              (src_[pos_] == '.' && !seen_point))) {
                    if (src_[pos_] == '.') seen_point = true;
                    advance();
                }
                if (pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    throw Error(ErrorKind::Syntax, diag::kSyntax,
                                where(loc) + "malformed number (implicit multiplication is not supported)");
                }
                out.push_back({Tok::Number, std::string(src_.substr(start, pos_ - start)), loc});
            } else {
                static constexpr std::string_view two[] = {"<=", ">=", "==", "!=", "&&", "||"};
                std::string op;
                for (auto t : two) {
                    if (src_.substr(pos_, 2) == t) op = std::string(t);
                }
                if (op.empty()) {
                    static constexpr std::string_view singles = "+-*/()=;<>![],^%";
                    if (singles.find(c) == std::string_view::npos) {
                        throw Error(ErrorKind::Syntax, diag::kSyntax,
                                    where(loc) + "unexpected character '" + std::string(1, c) + "'");
                    }
                    op = std::string(1, c);
                }
                for (std::size_t k = 0; k < op.size(); ++k) advance();
                out.push_back({Tok::Op, op, loc});
            }
        }
    }

    static std::string where(SourceLoc loc) {
        return "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": ";
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool is_keyword(std::string_view s) {
    return s == "while" || s == "if" || s == "else" || s == "end" || s == "true" || s == "false" || s == "elseif";
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    LoopAst parse_program() {
        skip_separators();
        if (!is_ident("while")) fail(peek(), "expected 'while'");
        LoopAst ast;
        ast.body.push_back(parse_while());
        skip_separators();
        if (peek().kind != Tok::End) {
            if (is_ident("while")) {
                unsupported(peek(), diag::kNestedWhile, "only a single top-level while loop is supported");
            }
            fail(peek(), "unexpected '" + peek().text + "' after the loop");
        }
        return ast;
    }

private:
    // Newlines are insignificant inside parentheses.
    const Token& peek() {
        while (paren_depth_ > 0 && toks_[pos_].kind == Tok::Newline) ++pos_;
        return toks_[pos_];
    }
    const Token& next() {
        const Token& t = peek();
        if (t.kind != Tok::End) ++pos_;
        return t;
    }

    bool is_ident(std::string_view s) { return peek().kind == Tok::Ident && peek().text == s; }
    bool is_op(std::string_view s) { return peek().kind == Tok::Op && peek().text == s; }

    void expect_op(std::string_view s) {
        if (!is_op(s)) fail(peek(), "expected '" + std::string(s) + "'");
        next();
    }

    [[noreturn]] void fail(const Token& at, const std::string& what) {
        std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
        throw Error(ErrorKind::Syntax, diag::kSyntax, Lexer::where(at.loc) + what + " (found " + found + ")");
    }

    [[noreturn]] void unsupported(const Token& at, const char* code, const std::string& what) {
        throw Error(ErrorKind::Unsupported, code, Lexer::where(at.loc) + what);
    }

    void skip_separators() {
        while (peek().kind == Tok::Newline || is_op(";")) next();
    }

    Stmt parse_while() {
        Stmt s;
        s.kind = Stmt::Kind::While;
        s.loc = next().loc;
        s.guard = parse_guard();
        s.body = parse_stmts();
        if (!is_ident("end")) fail(peek(), "expected 'end' closing 'while'");
        next();
        return s;
    }

    std::vector<Stmt> parse_stmts() {
        std::vector<Stmt> out;
        for (;;) {
            skip_separators();
            const Token& t = peek();
            if (t.kind == Tok::End) return out;
            if (t.kind == Tok::Ident && (t.text == "end" || t.text == "else")) return out;
            out.push_back(parse_stmt());
            // A statement must be followed by a separator or a block keyword.
            const Token& after = peek();
            bool ok = after.kind == Tok::Newline || after.kind == Tok::End || (after.kind == Tok::Op && after.text == ";") ||
                      (after.kind == Tok::Ident && (after.text == "end" || after.text == "else"));
            if (!ok) fail(after, "expected end of statement");
        }
    }

    Stmt parse_stmt() {
        const Token& t = peek();
        if (t.kind != Tok::Ident) fail(t, "expected a statement");
        if (t.text == "while") unsupported(t, diag::kNestedWhile, "nested while loops are not supported");
        if (t.text == "elseif") unsupported(t, diag::kSyntax, "'elseif' is not supported; nest 'if' inside 'else'");
        if (t.text == "if") return parse_if();
        if (is_keyword(t.text)) fail(t, "unexpected keyword");

        Token target = next();
        if (is_op("(")) unsupported(peek(), diag::kFunctionCall, "function calls are not supported");
        if (is_op("[")) unsupported(peek(), diag::kArrayAccess, "arrays are not supported");
        if (is_reserved_identifier(target.text)) {
            unsupported(target, diag::kReservedIdentifier,
                        "'" + target.text + "' is reserved (names ending in _0, n<digits>, t<digits>, or containing __)");
        }
        expect_op("=");
        Stmt s;
        s.kind = Stmt::Kind::Assign;
        s.loc = target.loc;
        s.target = target.text;
        s.value = parse_expr();
        return s;
    }

    Stmt parse_if() {
        Stmt s;
        s.kind = Stmt::Kind::If;
        s.loc = next().loc;
        s.guard = parse_guard();
        s.body = parse_stmts();
        if (is_ident("else")) {
            next();
            s.has_else = true;
            s.else_body = parse_stmts();
        }
        if (!is_ident("end")) fail(peek(), "expected 'end' closing 'if'");
        next();
        return s;
    }

    // Guards are parsed for well-formedness and kept only as normalized text.
    std::string parse_guard() {
        std::size_t start = pos_;
        guard_disjunction();
        std::string text;
        for (std::size_t k = start; k < pos_; ++k) {
            if (toks_[k].kind == Tok::Newline) continue;
            if (!text.empty()) text += ' ';
            text += toks_[k].text;
        }
        return text;
    }

    void guard_disjunction() {
        guard_conjunction();
        while (is_op("||")) {
            next();
            guard_conjunction();
        }
    }

    void guard_conjunction() {
        guard_atom();
        while (is_op("&&")) {
            next();
            guard_atom();
        }
    }

    void guard_atom() {
        if (is_op("!")) {
            next();
            guard_atom();
            return;
        }
        if (is_ident("true") || is_ident("false")) {
            next();
            return;
        }
        if (is_op("(")) {
            // Either a parenthesized guard or an arithmetic operand.
            std::size_t save = pos_;
            int depth = paren_depth_;
            try {
                next();
                ++paren_depth_;
                guard_disjunction();
                expect_op(")");
                --paren_depth_;
                if (!is_relop()) return;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Syntax) throw;
            }
            pos_ = save;
            paren_depth_ = depth;
        }
        parse_expr(/*in_guard=*/true);
        if (!is_relop()) fail(peek(), "expected a comparison operator in the guard");
        next();
        parse_expr(/*in_guard=*/true);
    }

    bool is_relop() {
        return is_op("<") || is_op("<=") || is_op(">") || is_op(">=") || is_op("==") || is_op("!=");
    }

    ExprPtr parse_expr(bool in_guard = false) {
        ExprPtr lhs = parse_term(in_guard);
        while (is_op("+") || is_op("-")) {
            Token op = next();
            ExprPtr rhs = parse_term(in_guard);
            lhs = Expr::binary(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, lhs, rhs, op.loc);
        }
        return lhs;
    }

    ExprPtr parse_term(bool in_guard) {
        ExprPtr lhs = parse_factor(in_guard);
        for (;;) {
            if (is_op("*")) {
                Token op = next();
                lhs = Expr::binary(Expr::Kind::Mul, lhs, parse_factor(in_guard), op.loc);
            } else if (is_op("/")) {
                Token op = next();
                ExprPtr divisor = parse_factor(in_guard);
                if (!in_guard) check_divisor(*divisor, op);
                lhs = Expr::binary(Expr::Kind::Div, lhs, divisor, op.loc);
            } else if (is_op("^") || is_op("%")) {
                unsupported(peek(), diag::kUnsupportedUpdate, "operator '" + peek().text + "' is not supported");
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_factor(bool in_guard) {
        const Token& t = peek();
        if (is_op("-")) {
            Token op = next();
            return Expr::unary_minus(parse_factor(in_guard), op.loc);
        }
        if (is_op("(")) {
            next();
            ++paren_depth_;
            ExprPtr e = parse_expr(in_guard);
            if (!is_op(")")) fail(peek(), "expected ')'");
            --paren_depth_;
            next();
            return e;
        }
        if (t.kind == Tok::Number) {
            Token num = next();
            return Expr::number(parse_rational(num.text), num.loc);
        }
        if (t.kind == Tok::Ident && !is_keyword(t.text)) {
            Token id = next();
            if (is_op("(")) unsupported(peek(), diag::kFunctionCall, "function calls are not supported");
            if (is_op("[")) unsupported(peek(), diag::kArrayAccess, "arrays are not supported");
            if (in_guard) return Expr::variable(id.text, id.loc);
            if (is_counter_identifier(id.text)) return Expr::counter(id.text, id.loc);
            if (is_reserved_identifier(id.text)) {
                unsupported(id, diag::kReservedIdentifier, "'" + id.text + "' is a reserved identifier");
            }
            return Expr::variable(id.text, id.loc);
        }
        fail(t, "expected an expression");
    }

    // Division only by expressions free of program variables.
    void check_divisor(const Expr& d, const Token& op) {
        if (mentions_variable(d)) {
            unsupported(op, diag::kDivisionByVariable, "division by a program variable is not supported");
        }
        if (auto v = constant_value(d); v && *v == 0) {
            unsupported(op, diag::kDivisionByZero, "division by zero");
        }
    }

    static bool mentions_variable(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::Variable: return true;
            case Expr::Kind::Number:
            case Expr::Kind::Counter: return false;
            case Expr::Kind::Neg: return mentions_variable(*e.lhs);
            default: return mentions_variable(*e.lhs) || mentions_variable(*e.rhs);
        }
    }

    static std::optional<Rational> constant_value(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::Number: return e.value;
            case Expr::Kind::Variable:
            case Expr::Kind::Counter: return std::nullopt;
            case Expr::Kind::Neg: {
                auto v = constant_value(*e.lhs);
                if (!v) return std::nullopt;
                return Rational(-*v);
            }
            default: {
                auto a = constant_value(*e.lhs);
                auto b = constant_value(*e.rhs);
                if (!a || !b) return std::nullopt;
                switch (e.kind) {
                    case Expr::Kind::Add: return Rational(*a + *b);
                    case Expr::Kind::Sub: return Rational(*a - *b);
                    case Expr::Kind::Mul: return Rational(*a * *b);
                    default:
                        if (*b == 0) return std::nullopt;
                        return Rational(*a / *b);
                }
            }
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int paren_depth_ = 0;
};

}  // namespace

LoopAst parse(std::string_view source) { return Parser(Lexer(source).run()).parse_program(); }

}  // namespace aligator::frontend
