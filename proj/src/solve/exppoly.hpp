#pragma once

#include "poly/multipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace aligator {

// Exponential polynomial in the counter n (variable 0 of the universe):
//
//   e(n) = sum_theta coeff_theta(n) * theta^n  +  sum_j [n = j] * delta_j
//
// Coefficients are polynomials in n and the remaining universe variables
// (symbolic initial values). Bases are nonzero. The finitely supported
// corrections delta_j (counter-free) represent the contribution of the
// characteristic root 0, e.g. a variable reset to a constant, whose value
// differs from the eventual pattern only at the first few counter values.
class ExpPoly {
public:
    ExpPoly() = default;
    explicit ExpPoly(UniversePtr universe);

    static ExpPoly constant(const UniversePtr& universe, const MultiPoly& value);  // value counter-free
    static ExpPoly geometric(const UniversePtr& universe, const Rational& base, const MultiPoly& coeff);

    const UniversePtr& universe() const noexcept { return universe_; }
    const std::map<Rational, MultiPoly>& terms() const noexcept { return terms_; }
    const std::map<long, MultiPoly>& deltas() const noexcept { return deltas_; }
    bool is_zero() const noexcept { return terms_.empty() && deltas_.empty(); }

    void add_term(const Rational& base, const MultiPoly& coeff);
    void add_delta(long j, const MultiPoly& value);

    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator*(const Rational& c) const;
    ExpPoly operator*(const MultiPoly& c) const;  // c counter-free
    ExpPoly operator-() const { return *this * Rational(-1); }
    bool operator==(const ExpPoly& o) const;

    // n -> n + s. Deltas that would land at negative counter values vanish.
    ExpPoly shift(long s) const;

    // Value at a concrete counter value as a counter-free polynomial.
    MultiPoly at(long n) const;
    // Fully numeric value; `point` assigns every universe variable except the
    // counter (point[0] is ignored).
    Rational evaluate(long n, std::vector<Rational> point) const;

    // Polynomial degree in the counter of the coefficient of `base` (-1 when absent).
    int degree_at(const Rational& base) const;

    // "-n1^2-n1*(v(0)-1)+r(0)"; initial-value variables print as x(0).
    std::string render() const;

private:
    UniversePtr universe_;
    std::map<Rational, MultiPoly> terms_;
    std::map<long, MultiPoly> deltas_;
};

// Printer used in closed-form text: x_0 -> x(0).
std::string render_name(const VarId& v);

}  // namespace aligator
