#include "tunesearch/problems/binpack.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tunesearch::problems {

namespace {

void check_items(const BinPackInstance& inst) {
    for (int item : inst.items)
        if (item > inst.capacity)
            throw ItemOversize("item " + std::to_string(item) + " exceeds capacity " +
                               std::to_string(inst.capacity));
}

} // namespace

int simulate_online(const BinPriority& priority, const BinPackInstance& inst) {
    check_items(inst);
    std::vector<int> remaining;
    for (int item : inst.items) {
        int bins_max = 0;
        for (int r : remaining) bins_max = std::max(bins_max, r);

        int chosen = -1;
        double best_score = 0.0;
        for (std::size_t b = 0; b < remaining.size(); ++b) {
            if (remaining[b] < item) continue;
            double score = priority(item, remaining[b], bins_max,
                                    static_cast<double>(remaining.size()),
                                    static_cast<double>(inst.capacity));
            if (chosen < 0 || score > best_score) {
                chosen = static_cast<int>(b);
                best_score = score;
            }
        }
        if (chosen < 0) {
            remaining.push_back(inst.capacity - item);
        } else {
            remaining[static_cast<std::size_t>(chosen)] -= item;
        }
    }
    return static_cast<int>(remaining.size());
}

int simulate_online(const priolang::ConcreteProgram& priority, const BinPackInstance& inst) {
    std::vector<priolang::Value> args(5);
    return simulate_online(
        [&](double item, double rem, double bins_max, double num_bins, double capacity) {
            args[0] = priolang::Value(item);
            args[1] = priolang::Value(rem);
            args[2] = priolang::Value(bins_max);
            args[3] = priolang::Value(num_bins);
            args[4] = priolang::Value(capacity);
            return priolang::eval_priority(priority, args);
        },
        inst);
}

int first_fit(const BinPackInstance& inst) {
    check_items(inst);
    std::vector<int> remaining;
    for (int item : inst.items) {
        bool placed = false;
        for (int& r : remaining) {
            if (r >= item) {
                r -= item;
                placed = true;
                break;
            }
        }
        if (!placed) remaining.push_back(inst.capacity - item);
    }
    return static_cast<int>(remaining.size());
}

int best_fit(const BinPackInstance& inst) {
    check_items(inst);
    std::vector<int> remaining;
    for (int item : inst.items) {
        int chosen = -1;
        for (std::size_t b = 0; b < remaining.size(); ++b) {
            if (remaining[b] < item) continue;
            if (chosen < 0 || remaining[b] < remaining[static_cast<std::size_t>(chosen)])
                chosen = static_cast<int>(b);
        }
        if (chosen < 0) {
            remaining.push_back(inst.capacity - item);
        } else {
            remaining[static_cast<std::size_t>(chosen)] -= item;
        }
    }
    return static_cast<int>(remaining.size());
}

long long l2_lower_bound(const BinPackInstance& inst) {
    check_items(inst);
    const long long C = inst.capacity;
    long long total = 0;
    for (int w : inst.items) total += w;
    long long best = (total + C - 1) / C; // ceil(sum / C)

    std::set<long long> thresholds{0};
    for (int w : inst.items)
        if (2LL * w <= C) thresholds.insert(w);

    for (long long k : thresholds) {
        long long j1 = 0;            // items > C - k: need a bin each, nothing joins them
        long long j2 = 0;            // items in (C/2, C - k]
        long long j2_sum = 0;
        long long j3_sum = 0;        // items in [k, C/2]
        for (int w : inst.items) {
            if (w > C - k) {
                ++j1;
            } else if (2LL * w > C) {
                ++j2;
                j2_sum += w;
            } else if (w >= k) {
                j3_sum += w;
            }
        }
        long long slack = j2 * C - j2_sum; // room left in the J2 bins
        long long overflow = j3_sum - slack;
        long long extra = overflow > 0 ? (overflow + C - 1) / C : 0;
        best = std::max(best, j1 + j2 + extra);
    }
    return best;
}

double excess_score(std::span<const int> results, std::span<const long long> bounds) {
    long long result_sum = 0;
    long long bound_sum = 0;
    for (int r : results) result_sum += r;
    for (long long b : bounds) bound_sum += b;
    if (bound_sum == 0) throw ZeroBound("sum of lower bounds is zero");
    return static_cast<double>(result_sum - bound_sum) / static_cast<double>(bound_sum);
}

} // namespace tunesearch::problems
