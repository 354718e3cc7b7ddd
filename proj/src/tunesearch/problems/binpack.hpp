#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tunesearch/common/errors.hpp"
#include "tunesearch/priolang/interp.hpp"

namespace tunesearch::problems {

struct BinPackInstance {
    int capacity = 0;
    std::vector<int> items; // online arrival order
};

struct ItemOversize : Error {
    using Error::Error;
};
struct ZeroBound : Error {
    using Error::Error;
};

// priority(item, bin_remaining, bins_max, num_bins, capacity) -> score.
using BinPriority = std::function<double(double item, double bin_remaining, double bins_max,
                                         double num_bins, double capacity)>;

// Online simulation: each item goes to the feasible open bin with the
// highest priority (ties to the lowest index), or opens a new bin when no
// open bin fits. Returns the number of bins used.
int simulate_online(const BinPriority& priority, const BinPackInstance& inst);
int simulate_online(const priolang::ConcreteProgram& priority, const BinPackInstance& inst);

int first_fit(const BinPackInstance& inst);
int best_fit(const BinPackInstance& inst);

// Martello-Toth L2 lower bound on the optimal offline bin count.
long long l2_lower_bound(const BinPackInstance& inst);

// Fraction of excess bins relative to the lower bounds:
// (sum(results) - sum(bounds)) / sum(bounds).
double excess_score(std::span<const int> results, std::span<const long long> bounds);

} // namespace tunesearch::problems
