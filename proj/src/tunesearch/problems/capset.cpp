#include "tunesearch/problems/capset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace tunesearch::problems {

namespace {

std::uint64_t rank_of(const F3Vector& v) {
    std::uint64_t r = 0;
    for (std::uint8_t d : v) r = r * 3 + d;
    return r;
}

F3Vector vector_of(std::uint64_t rank, int n) {
    F3Vector v(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rank % 3);
        rank /= 3;
    }
    return v;
}

// Third point on the line through a and b: -(a+b) mod 3, coordinate-wise.
F3Vector third_point(const F3Vector& a, const F3Vector& b) {
    F3Vector t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        t[i] = static_cast<std::uint8_t>((6 - a[i] - b[i]) % 3);
    return t;
}

std::uint64_t pow3(int n) {
    std::uint64_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

} // namespace

std::vector<F3Vector> enumerate_f3(int n) {
    std::uint64_t count = pow3(n);
    std::vector<F3Vector> out;
    out.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) out.push_back(vector_of(r, n));
    return out;
}

std::optional<std::array<F3Vector, 3>> find_collinear_triple(const std::vector<F3Vector>& vectors) {
    if (vectors.empty()) return std::nullopt;
    std::size_t n = vectors[0].size();
    std::unordered_set<std::uint64_t> members;
    for (const F3Vector& v : vectors) {
        if (v.size() != n) throw DimensionMismatch("vectors of mixed dimension");
        members.insert(rank_of(v));
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            F3Vector t = third_point(vectors[i], vectors[j]);
            // t always differs from both endpoints, so membership means a line.
            if (members.count(rank_of(t)))
                return std::array<F3Vector, 3>{vectors[i], vectors[j], t};
        }
    }
    return std::nullopt;
}

bool is_capset(const std::vector<F3Vector>& vectors) {
    return !find_collinear_triple(vectors).has_value();
}

std::vector<F3Vector> greedy_capset_from_scores(int n, const std::vector<double>& scores) {
    std::vector<std::uint32_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return scores[a] > scores[b];
    });

    std::vector<std::uint64_t> member_ranks;
    std::unordered_set<std::uint64_t> blocked;
    std::vector<F3Vector> result;
    for (std::uint32_t rank : order) {
        if (blocked.count(rank)) continue;
        F3Vector v = vector_of(rank, n);
        for (std::uint64_t m : member_ranks)
            blocked.insert(rank_of(third_point(v, vector_of(m, n))));
        member_ranks.push_back(rank);
        result.push_back(std::move(v));
    }
    return result;
}

std::vector<F3Vector> greedy_capset(const priolang::ConcreteProgram& priority, int n) {
    std::uint64_t count = pow3(n);
    std::vector<double> scores(count);
    std::vector<priolang::Value> args(2);
    args[1] = priolang::Value(static_cast<double>(n));
    for (std::uint64_t r = 0; r < count; ++r) {
        F3Vector v = vector_of(r, n);
        std::vector<priolang::Value> el;
        el.reserve(v.size());
        for (std::uint8_t d : v) el.push_back(priolang::Value(static_cast<double>(d)));
        args[0] = priolang::Value::tuple(std::move(el));
        scores[r] = priolang::eval_priority(priority, args);
    }
    return greedy_capset_from_scores(n, scores);
}

namespace {

struct CapSearch {
    int n;
    std::vector<F3Vector> points;
    int best = 0;

    void run(std::size_t idx, std::vector<std::uint64_t>& members,
             std::unordered_set<std::uint64_t>& blocked) {
        if (static_cast<int>(members.size()) > best) best = static_cast<int>(members.size());
        if (idx >= points.size()) return;
        if (static_cast<int>(members.size() + (points.size() - idx)) <= best) return;

        const F3Vector& v = points[idx];
        std::uint64_t r = rank_of(v);
        if (!blocked.count(r)) {
            std::vector<std::uint64_t> added;
            for (std::uint64_t m : members) {
                std::uint64_t t = rank_of(third_point(v, vector_of(m, n)));
                if (blocked.insert(t).second) added.push_back(t);
            }
            members.push_back(r);
            run(idx + 1, members, blocked);
            members.pop_back();
            for (std::uint64_t t : added) blocked.erase(t);
        }
        run(idx + 1, members, blocked);
    }
};

} // namespace

int max_capset_size(int n) {
    CapSearch search;
    search.n = n;
    search.points = enumerate_f3(n);
    std::vector<std::uint64_t> members;
    std::unordered_set<std::uint64_t> blocked;
    search.run(0, members, blocked);
    return search.best;
}

} // namespace tunesearch::problems
