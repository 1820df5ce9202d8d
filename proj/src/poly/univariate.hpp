#pragma once

#include "poly/multipoly.hpp"
#include "poly/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace aligator {

// Dense univariate polynomial over Q; coeffs()[k] multiplies x^k.
// The coefficient vector never has trailing zeros; zero is the empty vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
    // Product of (x - r) over the given roots.
    static UniPoly from_roots(const std::vector<Rational>& roots);

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return int(c_.size()) - 1; }  // -1 for zero
    const Rational& leading() const { return c_.back(); }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    UniPoly operator-() const { return *this * Rational(-1); }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    UniPoly monic() const;

    Rational evaluate(const Rational& x) const;
    // p(x + s)
    UniPoly shift(const Rational& s) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, or zero

struct RootFactorization {
    std::vector<std::pair<Rational, unsigned>> roots;  // ascending by value
    UniPoly cofactor;                                   // monic; constant 1 when p splits over Q

    bool splits() const { return cofactor.degree() <= 0; }
};

// Rational roots with multiplicities, by the rational root theorem on the
// integer-scaled polynomial and repeated deflation. When the number of
// candidate (p, q) divisor pairs exceeds `max_candidates`, the remaining
// factor is reported as non-splitting.
RootFactorization rational_roots(const UniPoly& p, std::size_t max_candidates = 1'000'000);

// Same for a polynomial in exactly one variable (or a constant).
RootFactorization rational_roots(const MultiPoly& p, std::size_t max_candidates = 1'000'000);

UniPoly to_unipoly(const MultiPoly& p, std::size_t var);

}  // namespace aligator
