#include "solve/exppoly.hpp"

#include "common/error.hpp"

namespace aligator {

ExpPoly::ExpPoly(UniversePtr universe) : universe_(std::move(universe)) {
    if (!universe_ || universe_->empty()) {
        throw Error(ErrorKind::Structural, diag::kInvalidArgument, "exponential polynomial needs a counter variable");
    }
}

ExpPoly ExpPoly::constant(const UniversePtr& universe, const MultiPoly& value) {
    ExpPoly e(universe);
    e.add_term(1, value);
    return e;
}

ExpPoly ExpPoly::geometric(const UniversePtr& universe, const Rational& base, const MultiPoly& coeff) {
    ExpPoly e(universe);
    e.add_term(base, coeff);
    return e;
}

void ExpPoly::add_term(const Rational& base, const MultiPoly& coeff) {
    if (base == 0) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "exponential base 0");
    if (coeff.is_zero()) return;
    auto it = terms_.find(base);
    if (it == terms_.end()) {
        terms_.emplace(base, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void ExpPoly::add_delta(long j, const MultiPoly& value) {
    if (j < 0 || value.is_zero()) return;
    auto it = deltas_.find(j);
    if (it == deltas_.end()) {
        deltas_.emplace(j, value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) deltas_.erase(it);
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    ExpPoly out = *this;
    for (const auto& [b, c] : o.terms_) out.add_term(b, c);
    for (const auto& [j, d] : o.deltas_) out.add_delta(j, d);
    return out;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const { return *this + (-o); }

ExpPoly ExpPoly::operator*(const Rational& c) const {
    ExpPoly out(universe_);
    if (c == 0) return out;
    for (const auto& [b, p] : terms_) out.terms_.emplace(b, p * c);
    for (const auto& [j, d] : deltas_) out.deltas_.emplace(j, d * c);
    return out;
}

ExpPoly ExpPoly::operator*(const MultiPoly& c) const {
    ExpPoly out(universe_);
    for (const auto& [b, p] : terms_) out.add_term(b, p * c);
    for (const auto& [j, d] : deltas_) out.add_delta(j, d * c);
    return out;
}

bool ExpPoly::operator==(const ExpPoly& o) const { return terms_ == o.terms_ && deltas_ == o.deltas_; }

ExpPoly ExpPoly::shift(long s) const {
    ExpPoly out(universe_);
    MultiPoly shifted_n = MultiPoly::variable(universe_, 0) + MultiPoly::constant(universe_, Rational(s));
    for (const auto& [b, p] : terms_) out.add_term(b, p.substitute(0, shifted_n) * pow(b, s));
    for (const auto& [j, d] : deltas_) out.add_delta(j - s, d);
    return out;
}

MultiPoly ExpPoly::at(long n) const {
    MultiPoly acc(universe_);
    for (const auto& [b, p] : terms_) acc += p.substitute(0, Rational(n)) * pow(b, n);
    if (auto it = deltas_.find(n); it != deltas_.end()) acc += it->second;
    return acc;
}

Rational ExpPoly::evaluate(long n, std::vector<Rational> point) const {
    point.resize(universe_->size());
    point[0] = n;
    Rational acc = 0;
    for (const auto& [b, p] : terms_) acc += p.evaluate(point) * pow(b, n);
    if (auto it = deltas_.find(n); it != deltas_.end()) acc += it->second.evaluate(point);
    return acc;
}

int ExpPoly::degree_at(const Rational& base) const {
    auto it = terms_.find(base);
    return it == terms_.end() ? -1 : int(it->second.degree_in(0));
}

std::string render_name(const VarId& v) {
    if (auto p = program_name_of_initial(v.name)) return *p + "(0)";
    return v.name;
}

namespace {

void append(std::string& out, const std::string& piece) {
    if (piece.empty()) return;
    if (out.empty() || piece.front() == '-') {
        out += piece;
    } else {
        out += "+" + piece;
    }
}

// Sum of coefficient * factor for one base, grouped by powers of the counter.
std::string render_group(const MultiPoly& coeff, const std::string& base_factor) {
    const UniversePtr& u = coeff.universe();
    const std::string& counter = (*u)[0].name;
    std::string out;
    std::vector<MultiPoly> by_power = coeff.coefficients_in(0);
    for (std::size_t k = by_power.size(); k-- > 0;) {
        const MultiPoly& c = by_power[k];
        if (c.is_zero()) continue;
        std::string factor = base_factor;
        if (k > 0) {
            std::string power = k == 1 ? counter : counter + "^" + std::to_string(k);
            factor = factor.empty() ? power : power + "*" + factor;
        }
        if (factor.empty()) {
            append(out, to_string(c, render_name));
        } else if (c.size() == 1) {
            const Term& t = c.terms().front();
            std::string mono = to_string(MultiPoly::monomial(u, t.mono), render_name);
            Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
            std::string text = mono == "1" ? factor : factor + "*" + mono;
            if (mag != 1) text = to_string(mag) + "*" + text;
            append(out, (t.coeff < 0 ? "-" : "") + text);
        } else {
            bool negative = c.terms().front().coeff < 0;
            std::string inner = to_string(negative ? -c : c, render_name);
            append(out, (negative ? "-" : "") + factor + "*(" + inner + ")");
        }
    }
    return out;
}

}  // namespace

std::string ExpPoly::render() const {
    const std::string& counter = (*universe_)[0].name;
    std::string out;
    for (const auto& [b, p] : terms_) {
        if (b == 1) continue;
        std::string base = is_integer(b) && b > 0 ? to_string(b) : "(" + to_string(b) + ")";
        append(out, render_group(p, base + "^" + counter));
    }
    if (auto it = terms_.find(Rational(1)); it != terms_.end()) append(out, render_group(it->second, ""));
    for (const auto& [j, d] : deltas_) {
        std::string bracket = "[" + counter + "=" + std::to_string(j) + "]";
        append(out, render_group(d, bracket));
    }
    return out.empty() ? "0" : out;
}

}  // namespace aligator
