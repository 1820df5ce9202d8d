#pragma once

#include "frontend/ast.hpp"

#include <string>
#include <vector>

namespace aligator::frontend {

struct Assignment {
    std::string var;
    ExprPtr value;
};

using AssignSeq = std::vector<Assignment>;

// Straight-line paths of a loop body. Guards are gone; an If with an else
// contributes two alternatives, one without an else contributes its body and
// the empty sequence.
struct PathSystem {
    std::vector<std::string> variables;  // assigned or read, first occurrence order
    std::vector<AssignSeq> paths;
};

PathSystem flatten(const LoopAst& ast);

}  // namespace aligator::frontend
