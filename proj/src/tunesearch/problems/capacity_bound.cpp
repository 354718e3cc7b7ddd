#include "tunesearch/problems/capacity_bound.hpp"

#include <cmath>

namespace tunesearch::problems {

CapacityBound capacity_lower_bound(std::int64_t s, int n, int w, int m) {
    // |A| = s * b0^(n-w) * b1^w with b0 = a0 * m * a1^(m-1), b1 = a1^m.
    double log_a1 = std::log(static_cast<double>(kCapA1));
    double log_b0 = std::log(static_cast<double>(kCapA0)) + std::log(static_cast<double>(m)) +
                    (m - 1) * log_a1;
    double log_b1 = m * log_a1;
    long long dimension = 6LL * m * n;
    double log_size = std::log(static_cast<double>(s)) + (n - w) * log_b0 + w * log_b1;
    return CapacityBound{std::exp(log_size / static_cast<double>(dimension)), dimension, m};
}

CapacityBound capacity_lower_bound_auto(std::int64_t s, int n, int w) {
    CapacityBound best;
    for (int m = 1; m <= 12; ++m) {
        CapacityBound b = capacity_lower_bound(s, n, w, m);
        if (b.c > best.c) best = b;
    }
    return best;
}

} // namespace tunesearch::problems
