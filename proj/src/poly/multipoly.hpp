#pragma once

#include "poly/monomial.hpp"
#include "poly/order.hpp"
#include "poly/rational.hpp"
#include "poly/universe.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aligator {

struct Term {
    Monomial mono;
    Rational coeff;

    bool operator==(const Term& other) const { return mono == other.mono && coeff == other.coeff; }
};

// Multivariate polynomial over Q attached to a variable universe.
//
// Terms are kept with nonzero coefficients, sorted in descending degrevlex
// order over the universe sequence. That storage order is also the printing
// order, so structural equality and text rendering are both canonical.
class MultiPoly {
public:
    MultiPoly() : MultiPoly(make_universe({})) {}
    explicit MultiPoly(UniversePtr universe);

    static MultiPoly constant(UniversePtr universe, const Rational& c);
    static MultiPoly variable(UniversePtr universe, std::string_view name);
    static MultiPoly variable(UniversePtr universe, std::size_t index);
    static MultiPoly monomial(UniversePtr universe, Monomial m, const Rational& c = 1);
    static MultiPoly from_terms(UniversePtr universe, std::vector<Term> terms);

    const UniversePtr& universe() const noexcept { return universe_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational constant_term() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly& operator+=(const MultiPoly& other) { return *this = *this + other; }
    MultiPoly& operator-=(const MultiPoly& other) { return *this = *this - other; }
    MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }
    MultiPoly& operator*=(const Rational& c) { return *this = *this * c; }
    MultiPoly pow(unsigned e) const;
    MultiPoly multiply_monomial(const Monomial& m, const Rational& c) const;

    bool operator==(const MultiPoly& other) const;

    // Leading term under an arbitrary order over this universe. Requires nonzero.
    const Term& leading_term(const MonomialOrder& order) const;

    unsigned total_degree() const noexcept;
    unsigned degree_in(std::size_t var) const noexcept;
    bool mentions(std::size_t var) const noexcept;
    bool mentions(std::string_view name) const;

    // Replace variable `var` by `value` (a polynomial over the same universe).
    MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
    MultiPoly substitute(std::size_t var, const Rational& value) const;
    Rational evaluate(std::span<const Rational> point) const;

    // Coefficients with respect to one variable: result[k] is the coefficient
    // of var^k, a polynomial over the same universe not mentioning var.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const;

    // Moves the polynomial into another universe, matching variables by name.
    // `rename` maps a source name to its target name (identity by default).
    MultiPoly rebase(UniversePtr target) const;
    MultiPoly rebase(UniversePtr target, const std::function<std::string(const std::string&)>& rename) const;

    // Scalar normalizations.
    MultiPoly monic(const MonomialOrder& order) const;
    // Integer coefficients with gcd 1 and positive leading coefficient in
    // storage order.
    MultiPoly primitive() const;

private:
    void normalize();  // sort, merge duplicates, drop zeros

    UniversePtr universe_;
    std::vector<Term> terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

using NamePrinter = std::function<std::string(const VarId&)>;

// Canonical text: terms in storage order, `*` between factors, `^` for
// powers, e.g. "v_0^2-u_0^2+4*r_0-2".
std::string to_string(const MultiPoly& p);
std::string to_string(const MultiPoly& p, const NamePrinter& names);

// Parses polynomial text over the given universe (numbers, identifiers,
// + - * / ^ and parentheses; division only by nonzero constants).
MultiPoly parse_polynomial(std::string_view text, const UniversePtr& universe);

void require_same_universe(const MultiPoly& a, const MultiPoly& b);

}  // namespace aligator
