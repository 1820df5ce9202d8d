#pragma once

#include "poly/univariate.hpp"

#include <string>

namespace aligator {

// Univariate rational function num/den over Q in lowest terms, den monic.
class RatFunc {
public:
    RatFunc() : num_(), den_(UniPoly::constant(1)) {}
    RatFunc(UniPoly num, UniPoly den);  // den nonzero
    static RatFunc constant(const Rational& c) { return RatFunc(UniPoly::constant(c), UniPoly::constant(1)); }
    static RatFunc x() { return RatFunc(UniPoly::x(), UniPoly::constant(1)); }

    const UniPoly& num() const noexcept { return num_; }
    const UniPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const { return num_.coeff(0); }  // requires is_constant()

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // o nonzero
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    Rational evaluate(const Rational& x) const;  // throws when den(x) = 0

    std::string to_string(const std::string& var) const;

private:
    UniPoly num_, den_;
};

}  // namespace aligator
