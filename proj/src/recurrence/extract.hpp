#pragma once

#include "frontend/flatten.hpp"
#include "recurrence/ratfunc.hpp"

#include <string>
#include <vector>

namespace aligator {

// v(n+1) = sum_j coeffs[j]*v_j(n) + constant, or v(n+1) = ratio(n)*v(n).
struct Update {
    enum class Kind { Affine, RationalScale };

    Kind kind = Kind::Affine;
    std::vector<Rational> coeffs;  // indexed like RecurrenceSystem::variables
    Rational constant;
    RatFunc ratio;

    bool is_identity(std::size_t self) const;
};

struct RecurrenceSystem {
    std::string counter;                 // n1, n2, ...
    std::vector<std::string> variables;  // program variables
    std::vector<Update> updates;         // one per variable

    std::size_t index_of(const std::string& var) const;

    // Applies one simultaneous step at counter value n.
    std::vector<Rational> step(const std::vector<Rational>& state, long n) const;

    // "r(n1+1) = r(n1) - v(n1)" per variable.
    std::vector<std::string> render() const;
};

// Composes the sequential assignments of one path into a simultaneous
// update over `variables`. The counter of path `index` is n<index>.
RecurrenceSystem extract_recurrences(const frontend::AssignSeq& path, const std::vector<std::string>& variables,
                                     std::size_t index);

// All paths of a loop, numbered from 1. Explicit counter identifiers are
// only meaningful when the loop has a single path.
std::vector<RecurrenceSystem> extract_all(const frontend::PathSystem& ps);

}  // namespace aligator
