#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aligator {

enum class VarKind { Program, Initial, Counter, BaseSequence, Auxiliary };

std::string_view to_string(VarKind kind);

struct VarId {
    std::string name;
    VarKind kind = VarKind::Program;

    bool operator==(const VarId&) const = default;
};

VarId program_var(std::string name);
VarId initial_var(std::string_view program_name);  // x -> x_0
VarId counter_var(std::size_t path_index);         // 1 -> n1
VarId base_sequence_var(std::size_t index);        // 1 -> t1
VarId auxiliary_var(std::string name);

// "x_0" -> "x"; empty when the name is not an initial-value name.
std::optional<std::string> program_name_of_initial(std::string_view name);

// An ordered, duplicate-free list of variables. Position in the list is the
// variable's index in every exponent vector over this universe.
class Universe {
public:
    Universe() = default;
    explicit Universe(std::vector<VarId> vars);

    std::size_t size() const noexcept { return vars_.size(); }
    bool empty() const noexcept { return vars_.empty(); }
    const VarId& operator[](std::size_t i) const { return vars_[i]; }
    std::span<const VarId> vars() const noexcept { return vars_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require(std::string_view name) const;  // throws Structural
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    bool operator==(const Universe& other) const { return vars_ == other.vars_; }

private:
    std::vector<VarId> vars_;
    std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<VarId> vars);

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace aligator
