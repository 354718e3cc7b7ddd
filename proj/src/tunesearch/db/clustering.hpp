#pragma once

#include <cstdint>
#include <vector>

#include "tunesearch/common/errors.hpp"

namespace tunesearch::db {

struct InfeasibleError : Error {
    using Error::Error;
};

// Lloyd's algorithm on a 1-D point set with k-means++ seeding, fixed RNG
// seed 0, at most 100 iterations. Returns one label per point.
std::vector<int> kmeans_1d(const std::vector<double>& points, int k);

// Geometric cluster-selection probabilities p[i] = p0 * r^i with sum(p) = 1,
// r found by binary search (absolute residual <= 1e-12). Indexing starts at
// 0, so the top cluster keeps probability p0 whenever k is large enough.
std::vector<double> cluster_probs(int k, double p0);

} // namespace tunesearch::db
