#pragma once

#include <cstdint>

namespace tunesearch::problems {

// Cap-set capacity lower bound from an admissible set of size s in
// dimension/weight (n, w), lifted through the recursion parameter m with the
// fixed pair of 6-dimensional cap constants (a0, a1) = (12, 112). The cap
// lives in F_3^{6*m*n}; the bound is size^{1/dimension}, computed in log
// space.
struct CapacityBound {
    double c = 0.0;
    long long dimension = 0;
    int m = 0;
};

inline constexpr int kCapA0 = 12;
inline constexpr int kCapA1 = 112;

CapacityBound capacity_lower_bound(std::int64_t s, int n, int w, int m);

// Scans m in [1, 12] and returns the maximizing bound.
CapacityBound capacity_lower_bound_auto(std::int64_t s, int n, int w);

} // namespace tunesearch::problems
