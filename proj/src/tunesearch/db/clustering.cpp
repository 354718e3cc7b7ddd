#include "tunesearch/db/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tunesearch/common/rng.hpp"

namespace tunesearch::db {

std::vector<int> kmeans_1d(const std::vector<double>& points, int k) {
    std::size_t n = points.size();
    std::size_t kk = static_cast<std::size_t>(k);
    if (kk >= n) {
        // Each point its own cluster (extras unused).
        std::vector<int> labels(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i);
        return labels;
    }

    Rng rng(0);

    // k-means++ seeding.
    std::vector<double> centers;
    centers.push_back(points[rng.next_below(n)]);
    std::vector<double> dist2(n);
    while (centers.size() < kk) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (double c : centers) best = std::min(best, (points[i] - c) * (points[i] - c));
            dist2[i] = best;
            total += best;
        }
        if (total == 0.0) {
            centers.push_back(points[rng.next_below(n)]);
            continue;
        }
        double u = rng.next_double() * total;
        double acc = 0.0;
        std::size_t pick = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
            acc += dist2[i];
            if (u < acc) {
                pick = i;
                break;
            }
        }
        centers.push_back(points[pick]);
    }

    std::vector<int> labels(n, 0);
    for (int iter = 0; iter < 100; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < centers.size(); ++c) {
                double d = std::abs(points[i] - centers[c]);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(c);
                }
            }
            if (labels[i] != best) {
                labels[i] = best;
                changed = true;
            }
        }
        if (!changed && iter > 0) break;
        for (std::size_t c = 0; c < centers.size(); ++c) {
            double sum = 0.0;
            int count = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (labels[i] == static_cast<int>(c)) {
                    sum += points[i];
                    ++count;
                }
            }
            if (count > 0) centers[c] = sum / count;
        }
    }
    return labels;
}

std::vector<double> cluster_probs(int k, double p0) {
    if (k <= 1) return {1.0};
    if (p0 >= 1.0)
        throw InfeasibleError("base probability must be below 1 for multiple clusters");

    auto total = [&](double r) {
        double sum = 0.0;
        double term = p0;
        for (int i = 0; i < k; ++i) {
            sum += term;
            term *= r;
        }
        return sum;
    };

    double lo = 0.0;
    double hi = 1.0;
    while (total(hi) < 1.0) hi *= 2.0;
    double r = hi;
    for (int iter = 0; iter < 200; ++iter) {
        r = 0.5 * (lo + hi);
        double t = total(r);
        if (std::abs(t - 1.0) <= 1e-13) break;
        if (t < 1.0) lo = r;
        else hi = r;
    }

    std::vector<double> probs(static_cast<std::size_t>(k));
    double term = p0;
    for (int i = 0; i < k; ++i) {
        probs[static_cast<std::size_t>(i)] = term;
        term *= r;
    }
    return probs;
}

} // namespace tunesearch::db
