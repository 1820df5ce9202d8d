#include "recurrence/ratfunc.hpp"

#include "common/error.hpp"

namespace aligator {

RatFunc::RatFunc(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw Error(ErrorKind::Structural, diag::kInvalidArgument, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly();
        den_ = UniPoly::constant(1);
        return;
    }
    UniPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    Rational lead = den.leading();
    num_ = num * Rational(1 / lead);
    den_ = den * Rational(1 / lead);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error(ErrorKind::Unsupported, diag::kDivisionByZero, "division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

Rational RatFunc::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d == 0) {
        throw Error(ErrorKind::Unsupported, diag::kDivisionByZero,
                    "rational function " + to_string("n") + " has a pole at " + aligator::to_string(x));
    }
    return num_.evaluate(x) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
    std::string n = num_.is_zero() ? "0" : num_.to_string(var);
    if (den_.degree() == 0) return n;
    return "(" + n + ")/(" + den_.to_string(var) + ")";
}

}  // namespace aligator
