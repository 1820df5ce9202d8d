#include "driver/verify.hpp"

#include "common/error.hpp"
#include "frontend/flatten.hpp"
#include "frontend/interp.hpp"
#include "frontend/parser.hpp"
#include "invariants/invariants.hpp"

#include <random>

namespace aligator {

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return make_rational(num(rng), den(rng));
}

}  // namespace

Verification verify_numeric(const frontend::LoopAst& ast, const std::vector<MultiPoly>& basis, int trials,
                            int max_steps, std::uint64_t seed) {
    Verification out{trials, max_steps, true, std::nullopt};
    if (basis.empty()) return out;
    frontend::PathSystem ps = frontend::flatten(ast);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);

    for (int trial = 0; trial < trials; ++trial) {
        frontend::State init;
        for (const auto& v : ps.variables) init[v] = random_rational(rng);
        // Variables that only occur in the basis still need values.
        for (const auto& p : basis)
            for (const auto& var : p.universe()->vars())
                if (var.kind == VarKind::Program && !init.count(var.name)) init[var.name] = random_rational(rng);
        frontend::State now = init;
        std::vector<std::vector<int>> branches;

        for (int step = 0;; ++step) {
            for (const auto& p : basis) {
                std::vector<Rational> point;
                for (const auto& var : p.universe()->vars()) {
                    auto base = program_name_of_initial(var.name);
                    point.push_back(base ? init.at(*base) : now.at(var.name));
                }
                if (p.evaluate(point) != 0) {
                    out.passed = false;
                    out.counterexample = Counterexample{{init.begin(), init.end()}, branches, step, to_string(p)};
                    return out;
                }
            }
            if (step == max_steps) break;
            std::vector<int> choices;
            frontend::execute_body(ast.loop().body, now, step, [&]() {
                int c = coin(rng) ? 1 : 0;
                choices.push_back(c);
                return c;
            });
            branches.push_back(std::move(choices));
        }
    }
    return out;
}

Verification verify_numeric(const std::string& source, const std::vector<std::string>& basis, int trials,
                            int max_steps, std::uint64_t seed) {
    frontend::LoopAst ast = frontend::parse(source);
    UniversePtr state = state_universe(frontend::flatten(ast).variables);
    std::vector<MultiPoly> polys;
    for (const auto& text : basis) polys.push_back(parse_polynomial(text, state));
    return verify_numeric(ast, polys, trials, max_steps, seed);
}

}  // namespace aligator
