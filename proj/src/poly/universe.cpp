#include "poly/universe.hpp"

#include "common/error.hpp"

namespace aligator {

std::string_view to_string(VarKind kind) {
    switch (kind) {
        case VarKind::Program: return "program";
        case VarKind::Initial: return "initial";
        case VarKind::Counter: return "counter";
        case VarKind::BaseSequence: return "base-sequence";
        case VarKind::Auxiliary: return "auxiliary";
    }
    return "unknown";
}

VarId program_var(std::string name) { return {std::move(name), VarKind::Program}; }

VarId initial_var(std::string_view program_name) {
    return {std::string(program_name) + "_0", VarKind::Initial};
}

VarId counter_var(std::size_t path_index) { return {"n" + std::to_string(path_index), VarKind::Counter}; }

VarId base_sequence_var(std::size_t index) { return {"t" + std::to_string(index), VarKind::BaseSequence}; }

VarId auxiliary_var(std::string name) { return {std::move(name), VarKind::Auxiliary}; }

std::optional<std::string> program_name_of_initial(std::string_view name) {
    if (name.size() > 2 && name.substr(name.size() - 2) == "_0") {
        return std::string(name.substr(0, name.size() - 2));
    }
    return std::nullopt;
}

Universe::Universe(std::vector<VarId> vars) : vars_(std::move(vars)) {
    index_.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!index_.emplace(vars_[i].name, i).second) {
            throw Error(ErrorKind::Structural, diag::kUniverseMismatch,
                        "duplicate variable '" + vars_[i].name + "' in universe");
        }
    }
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Universe::require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw Error(ErrorKind::Structural, diag::kUniverseMismatch,
                "variable '" + std::string(name) + "' is not in the universe");
}

UniversePtr make_universe(std::vector<VarId> vars) { return std::make_shared<const Universe>(std::move(vars)); }

}  // namespace aligator
