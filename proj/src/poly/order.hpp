#pragma once

#include "poly/monomial.hpp"

#include <cstddef>
#include <string>

namespace aligator {

// Monomial orders act on universe positions: variable 0 is the largest.
//   Lex        pure lexicographic.
//   DegRevLex  graded reverse lexicographic.
//   Block      elimination order: the first `block` variables are compared
//              first (degrevlex within the block), ties are broken by
//              degrevlex on the remaining variables.
//   BlockLex   as Block, but lex on the remaining variables.
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, Block, BlockLex };

    static MonomialOrder lex(std::size_t nvars) { return {Kind::Lex, nvars, 0}; }
    static MonomialOrder degrevlex(std::size_t nvars) { return {Kind::DegRevLex, nvars, 0}; }
    static MonomialOrder block(std::size_t nvars, std::size_t eliminated) {
        return {Kind::Block, nvars, eliminated};
    }
    static MonomialOrder block_lex(std::size_t nvars, std::size_t eliminated) {
        return {Kind::BlockLex, nvars, eliminated};
    }

    Kind kind() const noexcept { return kind_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t block_size() const noexcept { return block_; }

    // Negative, zero or positive as a <, ==, > b.
    int compare(const Monomial& a, const Monomial& b) const noexcept;
    bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

    std::string describe() const;

    bool operator==(const MonomialOrder&) const = default;

private:
    MonomialOrder(Kind kind, std::size_t nvars, std::size_t block) : kind_(kind), nvars_(nvars), block_(block) {}

    Kind kind_;
    std::size_t nvars_;
    std::size_t block_;
};

}  // namespace aligator
