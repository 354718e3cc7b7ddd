#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "tunesearch/problems/capset.hpp"

namespace tunesearch::problems {

struct AdmissibleParams {
    int n; // coordinate count
    int w; // required number of nonzero entries
};

// Predicate applied to every triple of distinct set members. The default
// requires some coordinate at which the three values are pairwise distinct,
// i.e. {0,1,2}. Kept pluggable so an alternative triple condition can be
// swapped in without touching the greedy machinery.
using TriplePredicate = std::function<bool(const F3Vector&, const F3Vector&, const F3Vector&)>;

bool default_triple_admissible(const F3Vector& a, const F3Vector& b, const F3Vector& c);

struct WeightViolation {
    F3Vector vector;
};
struct TripleViolation {
    std::array<F3Vector, 3> triple;
};
// Empty optional = admissible.
using AdmissibleCheck = std::optional<std::variant<WeightViolation, TripleViolation>>;

AdmissibleCheck check_admissible(const std::vector<F3Vector>& vectors, const AdmissibleParams& params,
                                 const TriplePredicate& predicate = default_triple_admissible);

bool is_admissible(const std::vector<F3Vector>& vectors, const AdmissibleParams& params,
                   const TriplePredicate& predicate = default_triple_admissible);

// All weight-w vectors of {0,1,2}^n in lexicographic order.
std::vector<F3Vector> enumerate_weighted(const AdmissibleParams& params);

std::vector<F3Vector> greedy_admissible_from_scores(const AdmissibleParams& params,
                                                    const std::vector<F3Vector>& candidates,
                                                    const std::vector<double>& scores,
                                                    const TriplePredicate& predicate = default_triple_admissible);

// Scores come from priority(el, n, w).
std::vector<F3Vector> greedy_admissible(const priolang::ConcreteProgram& priority,
                                        const AdmissibleParams& params,
                                        const TriplePredicate& predicate = default_triple_admissible);

} // namespace tunesearch::problems
