#include "tunesearch/problems/cycle_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>

namespace tunesearch::problems {

namespace {

std::uint64_t vertex_count(const CycleProductSpec& spec) {
    std::uint64_t count = 1;
    for (int i = 0; i < spec.n; ++i) count *= static_cast<std::uint64_t>(spec.m);
    return count;
}

std::uint64_t rank_of(const Vertex& v, int m) {
    std::uint64_t r = 0;
    for (int d : v) r = r * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(d);
    return r;
}

Vertex vertex_of(std::uint64_t rank, const CycleProductSpec& spec) {
    Vertex v(static_cast<std::size_t>(spec.n));
    for (int i = spec.n - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::uint64_t>(spec.m));
        rank /= static_cast<std::uint64_t>(spec.m);
    }
    return v;
}

// Visits the ranks of all 3^n - 1 strong-product neighbors of v.
template <typename Fn>
void for_each_neighbor(const Vertex& v, const CycleProductSpec& spec, Fn&& fn) {
    std::vector<int> delta(static_cast<std::size_t>(spec.n), -1);
    while (true) {
        bool all_zero = std::all_of(delta.begin(), delta.end(), [](int d) { return d == 0; });
        if (!all_zero) {
            std::uint64_t r = 0;
            for (int i = 0; i < spec.n; ++i) {
                int coord = (v[static_cast<std::size_t>(i)] + delta[static_cast<std::size_t>(i)] +
                             spec.m) % spec.m;
                r = r * static_cast<std::uint64_t>(spec.m) + static_cast<std::uint64_t>(coord);
            }
            fn(r);
        }
        int i = spec.n - 1;
        while (i >= 0 && delta[static_cast<std::size_t>(i)] == 1) {
            delta[static_cast<std::size_t>(i)] = -1;
            --i;
        }
        if (i < 0) break;
        ++delta[static_cast<std::size_t>(i)];
    }
}

} // namespace

bool strong_product_adjacent(const Vertex& u, const Vertex& v, int m) {
    if (u == v) return false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        int gap = ((u[i] - v[i]) % m + m) % m;
        if (gap != 0 && gap != 1 && gap != m - 1) return false;
    }
    return true;
}

std::vector<Vertex> enumerate_vertices(const CycleProductSpec& spec) {
    std::uint64_t count = vertex_count(spec);
    std::vector<Vertex> out;
    out.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) out.push_back(vertex_of(r, spec));
    return out;
}

std::optional<std::pair<Vertex, Vertex>> find_adjacent_pair(const std::vector<Vertex>& vertices,
                                                            const CycleProductSpec& spec) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (strong_product_adjacent(vertices[i], vertices[j], spec.m))
                return std::make_pair(vertices[i], vertices[j]);
    return std::nullopt;
}

bool is_independent(const std::vector<Vertex>& vertices, const CycleProductSpec& spec) {
    return !find_adjacent_pair(vertices, spec).has_value();
}

std::vector<Vertex> greedy_independent_set_from_scores(const CycleProductSpec& spec,
                                                       const std::vector<double>& scores) {
    std::vector<std::uint32_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return scores[a] > scores[b];
    });

    std::unordered_set<std::uint64_t> admitted;
    std::vector<Vertex> result;
    for (std::uint32_t rank : order) {
        Vertex v = vertex_of(rank, spec);
        bool blocked = false;
        for_each_neighbor(v, spec, [&](std::uint64_t r) {
            if (admitted.count(r)) blocked = true;
        });
        if (blocked) continue;
        admitted.insert(rank);
        result.push_back(std::move(v));
    }
    return result;
}

std::vector<Vertex> greedy_independent_set(const priolang::ConcreteProgram& priority,
                                           const CycleProductSpec& spec) {
    std::uint64_t count = vertex_count(spec);
    std::vector<double> scores(count);
    std::vector<priolang::Value> args(3);
    args[1] = priolang::Value(static_cast<double>(spec.m));
    args[2] = priolang::Value(static_cast<double>(spec.n));
    for (std::uint64_t r = 0; r < count; ++r) {
        Vertex v = vertex_of(r, spec);
        std::vector<priolang::Value> el;
        el.reserve(v.size());
        for (int d : v) el.push_back(priolang::Value(static_cast<double>(d)));
        args[0] = priolang::Value::tuple(std::move(el));
        scores[r] = priolang::eval_priority(priority, args);
    }
    return greedy_independent_set_from_scores(spec, scores);
}

namespace {

struct AlphaSearch {
    std::vector<std::uint64_t> adjacency;
    int best = 0;

    void run(std::uint64_t candidates, int size) {
        if (size > best) best = size;
        if (candidates == 0) return;
        if (size + std::popcount(candidates) <= best) return;

        // Branch on the candidate with the most candidate-neighbors.
        int pick = -1;
        int max_deg = -1;
        std::uint64_t rest = candidates;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int deg = std::popcount(adjacency[static_cast<std::size_t>(v)] & candidates);
            if (deg > max_deg) {
                max_deg = deg;
                pick = v;
            }
        }
        std::uint64_t bit = 1ULL << pick;
        run((candidates & ~adjacency[static_cast<std::size_t>(pick)]) & ~bit, size + 1);
        run(candidates & ~bit, size);
    }
};

} // namespace

int brute_force_alpha(const CycleProductSpec& spec) {
    std::uint64_t count = vertex_count(spec);
    if (count > 60) throw TooLarge("graph has " + std::to_string(count) + " vertices (limit 60)");

    std::vector<Vertex> vertices = enumerate_vertices(spec);
    AlphaSearch search;
    search.adjacency.assign(count, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (i != j && strong_product_adjacent(vertices[i], vertices[j], spec.m))
                search.adjacency[i] |= 1ULL << j;

    std::uint64_t all = count == 64 ? ~0ULL : (1ULL << count) - 1;
    search.run(all, 0);
    return search.best;
}

} // namespace tunesearch::problems
