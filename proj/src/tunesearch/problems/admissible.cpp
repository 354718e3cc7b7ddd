#include "tunesearch/problems/admissible.hpp"

#include <algorithm>
#include <numeric>

namespace tunesearch::problems {

bool default_triple_admissible(const F3Vector& a, const F3Vector& b, const F3Vector& c) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i] && a[i] != c[i] && b[i] != c[i]) return true;
    }
    return false;
}

AdmissibleCheck check_admissible(const std::vector<F3Vector>& vectors, const AdmissibleParams& params,
                                 const TriplePredicate& predicate) {
    for (const F3Vector& v : vectors) {
        if (static_cast<int>(v.size()) != params.n) throw DimensionMismatch("vector dimension != n");
        int weight = 0;
        for (std::uint8_t d : v) weight += d != 0;
        if (weight != params.w) return WeightViolation{v};
    }
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            for (std::size_t k = j + 1; k < vectors.size(); ++k)
                if (!predicate(vectors[i], vectors[j], vectors[k]))
                    return TripleViolation{{vectors[i], vectors[j], vectors[k]}};
    return std::nullopt;
}

bool is_admissible(const std::vector<F3Vector>& vectors, const AdmissibleParams& params,
                   const TriplePredicate& predicate) {
    return !check_admissible(vectors, params, predicate).has_value();
}

namespace {

void gen_weighted(F3Vector& prefix, int pos, int n, int nonzeros_left, std::vector<F3Vector>& out) {
    if (pos == n) {
        if (nonzeros_left == 0) out.push_back(prefix);
        return;
    }
    int remaining = n - pos;
    if (remaining - 1 >= nonzeros_left) { // a zero still leaves room
        prefix[static_cast<std::size_t>(pos)] = 0;
        gen_weighted(prefix, pos + 1, n, nonzeros_left, out);
    }
    if (nonzeros_left > 0) {
        for (std::uint8_t d : {std::uint8_t{1}, std::uint8_t{2}}) {
            prefix[static_cast<std::size_t>(pos)] = d;
            gen_weighted(prefix, pos + 1, n, nonzeros_left - 1, out);
        }
    }
}

} // namespace

std::vector<F3Vector> enumerate_weighted(const AdmissibleParams& params) {
    std::vector<F3Vector> out;
    F3Vector prefix(static_cast<std::size_t>(params.n));
    gen_weighted(prefix, 0, params.n, params.w, out);
    return out;
}

std::vector<F3Vector> greedy_admissible_from_scores(const AdmissibleParams&,
                                                    const std::vector<F3Vector>& candidates,
                                                    const std::vector<double>& scores,
                                                    const TriplePredicate& predicate) {
    std::vector<std::uint32_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return scores[a] > scores[b];
    });

    std::vector<F3Vector> result;
    for (std::uint32_t idx : order) {
        const F3Vector& v = candidates[idx];
        bool ok = true;
        for (std::size_t i = 0; i < result.size() && ok; ++i)
            for (std::size_t j = i + 1; j < result.size() && ok; ++j)
                if (!predicate(v, result[i], result[j])) ok = false;
        if (ok) result.push_back(v);
    }
    return result;
}

std::vector<F3Vector> greedy_admissible(const priolang::ConcreteProgram& priority,
                                        const AdmissibleParams& params,
                                        const TriplePredicate& predicate) {
    std::vector<F3Vector> candidates = enumerate_weighted(params);
    std::vector<double> scores(candidates.size());
    std::vector<priolang::Value> args(3);
    args[1] = priolang::Value(static_cast<double>(params.n));
    args[2] = priolang::Value(static_cast<double>(params.w));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::vector<priolang::Value> el;
        el.reserve(candidates[i].size());
        for (std::uint8_t d : candidates[i]) el.push_back(priolang::Value(static_cast<double>(d)));
        args[0] = priolang::Value::tuple(std::move(el));
        scores[i] = priolang::eval_priority(priority, args);
    }
    return greedy_admissible_from_scores(params, candidates, scores, predicate);
}

} // namespace tunesearch::problems
