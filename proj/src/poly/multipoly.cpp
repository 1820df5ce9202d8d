#include "poly/multipoly.hpp"

#include "common/error.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace aligator {

namespace {

MonomialOrder storage_order(const Universe& u) { return MonomialOrder::degrevlex(u.size()); }

}  // namespace

void require_same_universe(const MultiPoly& a, const MultiPoly& b) {
    if (!same_universe(a.universe(), b.universe())) {
        throw Error(ErrorKind::Structural, diag::kUniverseMismatch, "polynomials live over different universes");
    }
}

MultiPoly::MultiPoly(UniversePtr universe) : universe_(std::move(universe)) {
    if (!universe_) universe_ = make_universe({});
    if (universe_->size() > kMaxVars) {
        throw Error(ErrorKind::Structural, diag::kInvalidArgument,
                    "universe exceeds " + std::to_string(kMaxVars) + " variables");
    }
}

MultiPoly MultiPoly::constant(UniversePtr universe, const Rational& c) {
    MultiPoly p(std::move(universe));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(UniversePtr universe, std::string_view name) {
    std::size_t index = universe->require(name);
    return variable(std::move(universe), index);
}

MultiPoly MultiPoly::variable(UniversePtr universe, std::size_t index) {
    MultiPoly p(std::move(universe));
    p.terms_.push_back({Monomial::variable(index), Rational(1)});
    return p;
}

MultiPoly MultiPoly::monomial(UniversePtr universe, Monomial m, const Rational& c) {
    MultiPoly p(std::move(universe));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(UniversePtr universe, std::vector<Term> terms) {
    MultiPoly p(std::move(universe));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void MultiPoly::normalize() {
    auto order = storage_order(*universe_);
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

bool MultiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational MultiPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    require_same_universe(*this, other);
    auto order = storage_order(*universe_);
    MultiPoly r(universe_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = order.compare(terms_[i].mono, other.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(other.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + other.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const { return *this + (-other); }

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    require_same_universe(*this, other);
    if (terms_.empty() || other.terms_.empty()) return MultiPoly(universe_);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) terms.push_back({m, c});
    return from_terms(universe_, std::move(terms));
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    if (c == 0) return MultiPoly(universe_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(universe_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::multiply_monomial(const Monomial& m, const Rational& c) const {
    if (c == 0) return MultiPoly(universe_);
    MultiPoly r = *this;
    // Multiplying by a monomial preserves any multiplicative order.
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    return same_universe(universe_, other.universe_) && terms_ == other.terms_;
}

const Term& MultiPoly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "zero polynomial has no leading term");
    if (order.kind() == MonomialOrder::Kind::DegRevLex && order.nvars() == universe_->size()) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_) {
        if (order.greater(t.mono, best->mono)) best = &t;
    }
    return *best;
}

unsigned MultiPoly::total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned MultiPoly::degree_in(std::size_t var) const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

bool MultiPoly::mentions(std::size_t var) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] != 0; });
}

bool MultiPoly::mentions(std::string_view name) const {
    auto i = universe_->index_of(name);
    return i && mentions(*i);
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
    require_same_universe(*this, value);
    auto coeffs = coefficients_in(var);
    MultiPoly result(universe_);
    // Horner in the substituted variable.
    for (std::size_t k = coeffs.size(); k > 0; --k) result = result * value + coeffs[k - 1];
    return result;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Rational& value) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        unsigned e = t.mono[var];
        Monomial m = t.mono;
        m.set(var, 0);
        terms.push_back({m, t.coeff * aligator::pow(value, e)});
    }
    return from_terms(universe_, std::move(terms));
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != universe_->size()) {
        throw Error(ErrorKind::Structural, diag::kUniverseMismatch, "evaluation point has the wrong dimension");
    }
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (t.mono[i]) v *= aligator::pow(point[i], t.mono[i]);
        }
        sum += v;
    }
    return sum;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        unsigned e = m[var];
        m.set(var, 0);
        buckets[e].push_back({m, t.coeff});
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(universe_, std::move(b)));
    return out;
}

MultiPoly MultiPoly::rebase(UniversePtr target) const {
    return rebase(std::move(target), [](const std::string& s) { return s; });
}

MultiPoly MultiPoly::rebase(UniversePtr target,
                            const std::function<std::string(const std::string&)>& rename) const {
    std::vector<std::ptrdiff_t> map(universe_->size(), -1);
    for (std::size_t i = 0; i < universe_->size(); ++i) {
        if (auto j = target->index_of(rename((*universe_)[i].name))) map[i] = std::ptrdiff_t(*j);
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t i = 0; i < universe_->size(); ++i) {
            if (!t.mono[i]) continue;
            if (map[i] < 0) {
                throw Error(ErrorKind::Structural, diag::kUniverseMismatch,
                            "variable '" + (*universe_)[i].name + "' has no counterpart in the target universe");
            }
            m.set(std::size_t(map[i]), m[std::size_t(map[i])] + t.mono[i]);
        }
        terms.push_back({m, t.coeff});
    }
    return from_terms(std::move(target), std::move(terms));
}

MultiPoly MultiPoly::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / leading_term(order).coeff);
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return *this;
    BigInt den = 1, num = 0;
    for (const auto& t : terms_) {
        den = lcm(den, t.coeff.get_den());
        num = gcd(num, t.coeff.get_num());
    }
    Rational scale = make_rational(den, num);
    if (terms_.front().coeff < 0) scale = -scale;
    return *this * scale;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const MultiPoly& p) {
    return to_string(p, [](const VarId& v) { return v.name; });
}

std::string to_string(const MultiPoly& p, const NamePrinter& names) {
    if (p.is_zero()) return "0";
    const Universe& u = *p.universe();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (negative) {
            out += '-';
        } else if (!first) {
            out += '+';
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < u.size(); ++i) {
            unsigned e = t.mono[i];
            if (!e) continue;
            if (!factors.empty()) factors += '*';
            factors += names(u[i]);
            if (e > 1) factors += '^' + std::to_string(e);
        }
        if (factors.empty()) {
            out += to_string(c);
        } else if (c == 1) {
            out += factors;
        } else {
            out += to_string(c) + '*' + factors;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const UniversePtr& universe) : text_(text), universe_(universe) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Syntax, diag::kSyntax,
                    "polynomial text, column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc = acc * (Rational(1) / d.constant_term());
            } else {
                return acc;
            }
        }
    }

    // Unary minus binds looser than '^': -x^2 is -(x^2).
    MultiPoly power() {
        MultiPoly base = atom();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly atom() {
        skip_space();
        if (accept('(')) {
            MultiPoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            return MultiPoly::constant(universe_, parse_rational(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto index = universe_->index_of(name);
            if (!index) fail("unknown variable '" + name + "'");
            return MultiPoly::variable(universe_, *index);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const UniversePtr& universe_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, const UniversePtr& universe) {
    return PolyParser(text, universe).parse();
}

}  // namespace aligator
