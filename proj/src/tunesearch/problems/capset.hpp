#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tunesearch/common/errors.hpp"
#include "tunesearch/priolang/interp.hpp"

namespace tunesearch::problems {

// A point of F_3^n, one coordinate per entry, values in {0,1,2}.
using F3Vector = std::vector<std::uint8_t>;

struct DimensionMismatch : Error {
    using Error::Error;
};

// All 3^n points in lexicographic order.
std::vector<F3Vector> enumerate_f3(int n);

// First triple of distinct members summing to zero mod 3, if any.
std::optional<std::array<F3Vector, 3>> find_collinear_triple(const std::vector<F3Vector>& vectors);

// True iff no three distinct members sum to the zero vector mod 3.
bool is_capset(const std::vector<F3Vector>& vectors);

// Greedy constructor: scan candidates by descending score (ties broken by
// enumeration index) and admit a point iff it completes no line with the
// current set. `scores` is indexed by lexicographic rank.
std::vector<F3Vector> greedy_capset_from_scores(int n, const std::vector<double>& scores);

// Same, with scores produced by priority(el, n). Interpreter errors propagate.
std::vector<F3Vector> greedy_capset(const priolang::ConcreteProgram& priority, int n);

// Exact maximum cap size by branch and bound; practical for n <= 3.
int max_capset_size(int n);

} // namespace tunesearch::problems
