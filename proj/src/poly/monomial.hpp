#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace aligator {

inline constexpr std::size_t kMaxVars = 32;

// Dense exponent vector indexed by universe position. Entries past the
// universe size are always zero, so two monomials over the same universe
// compare correctly without knowing its size.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(std::span<const unsigned> exponents);

    static Monomial variable(std::size_t index, unsigned power = 1);

    unsigned operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, unsigned e);
    unsigned degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const;
    // Requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;

    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;
    Monomial lcm(const Monomial& other) const;

    bool operator==(const Monomial& other) const noexcept {
        return degree_ == other.degree_ && exps_ == other.exps_;
    }

    std::size_t hash() const noexcept;

    // Highest index with a nonzero exponent, or -1 for the constant monomial.
    int last_variable() const noexcept;

private:
    std::array<Exponent, kMaxVars> exps_{};
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace aligator
