#include "recurrence/extract.hpp"

#include "common/error.hpp"

#include <algorithm>
#include <map>

namespace aligator {

using frontend::Expr;

bool Update::is_identity(std::size_t self) const {
    if (kind != Kind::Affine || constant != 0) return false;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] != (j == self ? 1 : 0)) return false;
    }
    return true;
}

std::size_t RecurrenceSystem::index_of(const std::string& var) const {
    auto it = std::find(variables.begin(), variables.end(), var);
    if (it == variables.end()) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "unknown variable '" + var + "'");
    return std::size_t(it - variables.begin());
}

std::vector<Rational> RecurrenceSystem::step(const std::vector<Rational>& state, long n) const {
    std::vector<Rational> out(state.size());
    for (std::size_t i = 0; i < updates.size(); ++i) {
        const Update& u = updates[i];
        if (u.kind == Update::Kind::RationalScale) {
            out[i] = u.ratio.evaluate(Rational(n)) * state[i];
            continue;
        }
        Rational acc = u.constant;
        for (std::size_t j = 0; j < state.size(); ++j) acc += u.coeffs[j] * state[j];
        out[i] = acc;
    }
    return out;
}

std::vector<std::string> RecurrenceSystem::render() const {
    std::vector<std::string> out;
    auto at = [&](const std::string& v) { return v + "(" + counter + ")"; };
    for (std::size_t i = 0; i < variables.size(); ++i) {
        const Update& u = updates[i];
        std::string lhs = variables[i] + "(" + counter + "+1) = ";
        if (u.kind == Update::Kind::RationalScale) {
            out.push_back(lhs + u.ratio.to_string(counter) + "*" + at(variables[i]));
            continue;
        }
        std::string rhs;
        auto append = [&](const Rational& c, const std::string& factor) {
            if (c == 0) return;
            bool neg = c < 0;
            Rational mag = neg ? Rational(-c) : c;
            std::string body = factor.empty() ? to_string(mag) : (mag == 1 ? factor : to_string(mag) + "*" + factor);
            if (rhs.empty()) {
                rhs = (neg ? "-" : "") + body;
            } else {
                rhs += (neg ? " - " : " + ") + body;
            }
        };
        for (std::size_t j = 0; j < variables.size(); ++j) append(u.coeffs[j], at(variables[j]));
        append(u.constant, "");
        out.push_back(lhs + (rhs.empty() ? "0" : rhs));
    }
    return out;
}

namespace {

// Affine-in-variables expression whose coefficients are rational functions
// of the counter.
struct LinearForm {
    std::map<std::size_t, RatFunc> coeffs;  // zero entries removed
    RatFunc constant;

    bool variable_free() const { return coeffs.empty(); }

    LinearForm scaled(const RatFunc& s) const {
        LinearForm out;
        if (s.is_zero()) return out;
        for (const auto& [v, c] : coeffs) out.coeffs.emplace(v, c * s);
        out.constant = constant * s;
        return out;
    }

    LinearForm plus(const LinearForm& o, bool subtract) const {
        LinearForm out = *this;
        for (const auto& [v, c] : o.coeffs) {
            RatFunc cur = out.coeffs.count(v) ? out.coeffs.at(v) : RatFunc();
            RatFunc next = subtract ? cur - c : cur + c;
            if (next.is_zero()) {
                out.coeffs.erase(v);
            } else {
                out.coeffs[v] = next;
            }
        }
        out.constant = subtract ? constant - o.constant : constant + o.constant;
        return out;
    }
};

class Composer {
public:
    Composer(const std::vector<std::string>& vars, std::string counter) : vars_(vars), counter_(std::move(counter)) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            LinearForm f;
            f.coeffs.emplace(i, RatFunc::constant(1));
            state_.push_back(f);
        }
    }

    void assign(const std::string& var, const Expr& e) {
        LinearForm value = eval(e, var);
        state_[index(var)] = std::move(value);
    }

    const std::vector<LinearForm>& state() const { return state_; }

private:
    std::size_t index(const std::string& var) const {
        auto it = std::find(vars_.begin(), vars_.end(), var);
        if (it == vars_.end()) {
            throw Error(ErrorKind::Structural, diag::kInvalidArgument, "variable '" + var + "' missing from the path system");
        }
        return std::size_t(it - vars_.begin());
    }

    LinearForm eval(const Expr& e, const std::string& target) {
        switch (e.kind) {
            case Expr::Kind::Number: {
                LinearForm f;
                f.constant = RatFunc::constant(e.value);
                return f;
            }
            case Expr::Kind::Counter: {
                if (e.name != counter_) {
                    throw Error(ErrorKind::Unsupported, diag::kUnsupportedUpdate,
                                "counter '" + e.name + "' used in the update of '" + target + "'; this path's counter is '" +
                                    counter_ + "'");
                }
                LinearForm f;
                f.constant = RatFunc::x();
                return f;
            }
            case Expr::Kind::Variable: return state_[index(e.name)];
            case Expr::Kind::Neg: return eval(*e.lhs, target).scaled(RatFunc::constant(-1));
            case Expr::Kind::Add: return eval(*e.lhs, target).plus(eval(*e.rhs, target), false);
            case Expr::Kind::Sub: return eval(*e.lhs, target).plus(eval(*e.rhs, target), true);
            case Expr::Kind::Mul: {
                LinearForm a = eval(*e.lhs, target), b = eval(*e.rhs, target);
                if (a.variable_free()) return b.scaled(a.constant);
                if (b.variable_free()) return a.scaled(b.constant);
                throw Error(ErrorKind::Unsupported, diag::kUnsupportedUpdate,
                            "update of '" + target + "' multiplies program variables");
            }
            case Expr::Kind::Div: {
                LinearForm a = eval(*e.lhs, target), b = eval(*e.rhs, target);
                if (!b.variable_free()) {
                    throw Error(ErrorKind::Unsupported, diag::kDivisionByVariable,
                                "update of '" + target + "' divides by a program variable");
                }
                if (b.constant.is_zero()) {
                    throw Error(ErrorKind::Unsupported, diag::kDivisionByZero, "update of '" + target + "' divides by zero");
                }
                return a.scaled(RatFunc::constant(1) / b.constant);
            }
        }
        return {};
    }

    const std::vector<std::string>& vars_;
    std::string counter_;
    std::vector<LinearForm> state_;
};

// True when p vanishes at some n in {0, 1, 2, ...}.
bool has_nonnegative_integer_root(const UniPoly& p) {
    if (p.degree() <= 0) return false;
    for (const auto& [root, mult] : rational_roots(p).roots) {
        (void)mult;
        if (root >= 0 && is_integer(root)) return true;
    }
    return false;
}

bool has_counter_node(const Expr& e) {
    if (e.kind == Expr::Kind::Counter) return true;
    return (e.lhs && has_counter_node(*e.lhs)) || (e.rhs && has_counter_node(*e.rhs));
}

}  // namespace

RecurrenceSystem extract_recurrences(const frontend::AssignSeq& path, const std::vector<std::string>& variables,
                                     std::size_t index) {
    RecurrenceSystem sys;
    sys.counter = "n" + std::to_string(index);
    sys.variables = variables;
    Composer composer(variables, sys.counter);
    for (const auto& a : path) composer.assign(a.var, *a.value);

    for (std::size_t i = 0; i < variables.size(); ++i) {
        const LinearForm& f = composer.state()[i];
        Update u;
        bool constant_coeffs = f.constant.is_constant();
        for (const auto& [v, c] : f.coeffs) constant_coeffs = constant_coeffs && c.is_constant();
        if (constant_coeffs) {
            u.kind = Update::Kind::Affine;
            u.coeffs.assign(variables.size(), Rational(0));
            for (const auto& [v, c] : f.coeffs) u.coeffs[v] = c.constant_value();
            u.constant = f.constant.constant_value();
        } else if (f.constant.is_zero() && f.coeffs.size() == 1 && f.coeffs.begin()->first == i) {
            u.kind = Update::Kind::RationalScale;
            u.ratio = f.coeffs.begin()->second;
            if (has_nonnegative_integer_root(u.ratio.den())) {
                throw Error(ErrorKind::Unsupported, diag::kUnsupportedUpdate,
                            "scaling factor " + u.ratio.to_string(sys.counter) + " of '" + variables[i] +
                                "' has a pole at a nonnegative counter value");
            }
        } else {
            throw Error(ErrorKind::Unsupported, diag::kUnsupportedUpdate,
                        "update of '" + variables[i] +
                            "' mixes counter-dependent scaling with other terms; only affine updates with constant "
                            "coefficients or pure rational scaling are supported");
        }
        sys.updates.push_back(std::move(u));
    }
    return sys;
}

std::vector<RecurrenceSystem> extract_all(const frontend::PathSystem& ps) {
    if (ps.paths.size() > 1) {
        for (const auto& p : ps.paths) {
            for (const auto& a : p) {
                if (has_counter_node(*a.value)) {
                    throw Error(ErrorKind::Unsupported, diag::kCounterInMultiPath,
                                "counter identifiers may only be used in loops with a single path (update of '" + a.var +
                                    "')");
                }
            }
        }
    }
    std::vector<RecurrenceSystem> out;
    for (std::size_t i = 0; i < ps.paths.size(); ++i) out.push_back(extract_recurrences(ps.paths[i], ps.variables, i + 1));
    return out;
}

}  // namespace aligator
