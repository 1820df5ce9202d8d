#include "poly/univariate.hpp"

#include "common/error.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace aligator {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly p = constant(1);
    for (const auto& r : roots) p = p * UniPoly({Rational(-r), Rational(1)});
    return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorKind::Structural, diag::kDivisionByZero, "polynomial division by zero");
    std::vector<Rational> rem = c_;
    int dd = divisor.degree();
    if (degree() < dd) return {UniPoly{}, *this};
    std::vector<Rational> quot(std::size_t(degree() - dd + 1));
    for (int k = degree(); k >= dd; --k) {
        Rational q = rem[std::size_t(k)] / divisor.leading();
        quot[std::size_t(k - dd)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[std::size_t(k - dd + j)] -= q * divisor.c_[std::size_t(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = c_.size(); k > 0; --k) acc = acc * x + c_[k - 1];
    return acc;
}

UniPoly UniPoly::shift(const Rational& s) const {
    UniPoly acc;
    UniPoly lin({s, Rational(1)});
    for (std::size_t k = c_.size(); k > 0; --k) acc = acc * lin + constant(c_[k - 1]);
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    auto u = make_universe({program_var(var)});
    std::vector<Term> terms;
    for (std::size_t k = 0; k < c_.size(); ++k) terms.push_back({Monomial::variable(0, unsigned(k)), c_[k]});
    return aligator::to_string(MultiPoly::from_terms(u, std::move(terms)));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        auto r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

// Positive divisors of |n| (n != 0), ascending; nullopt when trial division
// would need more than `limit` steps.
std::optional<std::vector<BigInt>> divisors(const BigInt& n, std::size_t limit) {
    BigInt m = abs(n);
    BigInt root = sqrt(m);
    if (root > BigInt(static_cast<unsigned long>(limit))) return std::nullopt;
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            BigInt q = m / d;
            if (q != d) large.push_back(q);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

RootFactorization rational_roots(const UniPoly& p, std::size_t max_candidates) {
    if (p.is_zero()) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "rational_roots of the zero polynomial");
    RootFactorization out;
    UniPoly rest = p.monic();

    // Root 0.
    unsigned zero_mult = 0;
    while (rest.degree() > 0 && rest.coeff(0) == 0) {
        rest = rest.divmod(UniPoly::x()).first;
        ++zero_mult;
    }
    std::vector<std::pair<Rational, unsigned>> found;
    if (zero_mult) found.push_back({Rational(0), zero_mult});

    if (rest.degree() > 0) {
        // Integer scaling: multiply by the lcm of denominators.
        BigInt den = 1;
        for (const auto& c : rest.coeffs()) den = lcm(den, c.get_den());
        BigInt lead = Rational(rest.leading() * den).get_num();
        BigInt tail = Rational(rest.coeff(0) * den).get_num();
        auto ps = divisors(tail, max_candidates);
        auto qs = divisors(lead, max_candidates);
        if (ps && qs && ps->size() * qs->size() <= max_candidates) {
            std::set<Rational> candidates;
            for (const auto& a : *ps) {
                for (const auto& b : *qs) {
                    Rational r = make_rational(a, b);
                    candidates.insert(r);
                    candidates.insert(-r);
                }
            }
            for (const auto& r : candidates) {
                if (rest.degree() <= 0) break;
                unsigned mult = 0;
                UniPoly lin({Rational(-r), Rational(1)});
                while (rest.degree() > 0 && rest.evaluate(r) == 0) {
                    rest = rest.divmod(lin).first;
                    ++mult;
                }
                if (mult) found.push_back({r, mult});
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.roots = std::move(found);
    out.cofactor = rest.monic();
    return out;
}

UniPoly to_unipoly(const MultiPoly& p, std::size_t var) {
    std::vector<Rational> c(p.degree_in(var) + 1);
    for (const auto& t : p.terms()) {
        if (t.mono.degree() != t.mono[var]) {
            throw Error(ErrorKind::Structural, diag::kInvalidArgument, "polynomial is not univariate");
        }
        c[t.mono[var]] += t.coeff;
    }
    return UniPoly(std::move(c));
}

RootFactorization rational_roots(const MultiPoly& p, std::size_t max_candidates) {
    int var = -1;
    for (const auto& t : p.terms()) {
        for (std::size_t i = 0; i < p.universe()->size(); ++i) {
            if (!t.mono[i]) continue;
            if (var >= 0 && std::size_t(var) != i) {
                throw Error(ErrorKind::Structural, diag::kInvalidArgument, "polynomial is not univariate");
            }
            var = int(i);
        }
    }
    if (var < 0) return rational_roots(UniPoly::constant(p.constant_term()), max_candidates);
    return rational_roots(to_unipoly(p, std::size_t(var)), max_candidates);
}

}  // namespace aligator
