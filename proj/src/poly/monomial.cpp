#include "poly/monomial.hpp"

#include "common/error.hpp"

#include <limits>
#include <string>

namespace aligator {

namespace {
[[noreturn]] void overflow() {
    throw Error(ErrorKind::Structural, diag::kInvalidArgument, "monomial exponent overflow");
}
}  // namespace

Monomial::Monomial(std::span<const unsigned> exponents) {
    if (exponents.size() > kMaxVars) {
        throw Error(ErrorKind::Structural, diag::kInvalidArgument,
                    "more than " + std::to_string(kMaxVars) + " variables");
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
    Monomial m;
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, unsigned e) {
    if (i >= kMaxVars) {
        throw Error(ErrorKind::Structural, diag::kInvalidArgument,
                    "more than " + std::to_string(kMaxVars) + " variables");
    }
    if (e > std::numeric_limits<Exponent>::max()) overflow();
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned e = unsigned(exps_[i]) + other.exps_[i];
        if (e > std::numeric_limits<Exponent>::max()) overflow();
        r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
    r.degree_ = degree_ - other.degree_;
    return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.exps_[i] = std::max(exps_[i], other.exps_[i]);
        d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

int Monomial::last_variable() const noexcept {
    for (int i = int(kMaxVars) - 1; i >= 0; --i) {
        if (exps_[i] != 0) return i;
    }
    return -1;
}

}  // namespace aligator
