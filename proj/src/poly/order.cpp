#include "poly/order.hpp"

namespace aligator {

namespace {

int compare_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

int compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i > lo; --i) {
        if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
        case Kind::Lex:
            return compare_lex(a, b, 0, nvars_);
        case Kind::DegRevLex: {
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            for (std::size_t i = nvars_; i > 0; --i) {
                if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
            }
            return 0;
        }
        case Kind::Block: {
            if (int c = compare_degrevlex(a, b, 0, block_)) return c;
            return compare_degrevlex(a, b, block_, nvars_);
        }
        case Kind::BlockLex: {
            if (int c = compare_degrevlex(a, b, 0, block_)) return c;
            return compare_lex(a, b, block_, nvars_);
        }
    }
    return 0;
}

std::string MonomialOrder::describe() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::DegRevLex: return "degrevlex";
        case Kind::Block: return "block(" + std::to_string(block_) + ")";
        case Kind::BlockLex: return "blocklex(" + std::to_string(block_) + ")";
    }
    return "?";
}

}  // namespace aligator
