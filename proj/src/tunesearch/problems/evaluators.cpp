#include "tunesearch/problems/evaluators.hpp"

namespace tunesearch::problems {

namespace {

template <typename Fn>
Evaluation guarded(Fn&& fn) {
    try {
        return Evaluation{true, fn(), {}};
    } catch (const priolang::EvalError& e) {
        return Evaluation{false, 0.0, e.what()};
    } catch (const std::out_of_range& e) {
        return Evaluation{false, 0.0, e.what()};
    }
}

} // namespace

Evaluation CapSetEvaluator::evaluate(const priolang::ConcreteProgram& program) const {
    return guarded([&] { return static_cast<double>(greedy_capset(program, n_).size()); });
}

Evaluation AdmissibleEvaluator::evaluate(const priolang::ConcreteProgram& program) const {
    return guarded(
        [&] { return static_cast<double>(greedy_admissible(program, params_, predicate_).size()); });
}

Evaluation CycleEvaluator::evaluate(const priolang::ConcreteProgram& program) const {
    return guarded(
        [&] { return static_cast<double>(greedy_independent_set(program, spec_).size()); });
}

BinPackEvaluator::BinPackEvaluator(std::vector<BinPackInstance> instances)
    : instances_(std::move(instances)) {
    bounds_.reserve(instances_.size());
    for (const BinPackInstance& inst : instances_) bounds_.push_back(l2_lower_bound(inst));
}

Evaluation BinPackEvaluator::evaluate(const priolang::ConcreteProgram& program) const {
    return guarded([&] {
        std::vector<int> results;
        results.reserve(instances_.size());
        for (const BinPackInstance& inst : instances_)
            results.push_back(simulate_online(program, inst));
        return -excess_score(results, bounds_);
    });
}

Evaluation ToyEvaluator::evaluate(const priolang::ConcreteProgram& program) const {
    return guarded([&] { return priolang::eval_priority(program, {}); });
}

} // namespace tunesearch::problems
