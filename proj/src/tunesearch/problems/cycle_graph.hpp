#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tunesearch/common/errors.hpp"
#include "tunesearch/priolang/interp.hpp"

namespace tunesearch::problems {

// Strong product power C_m^{boxtimes n} of the m-cycle.
struct CycleProductSpec {
    int m; // cycle length, odd, >= 3
    int n; // product power
};

using Vertex = std::vector<int>;

struct TooLarge : Error {
    using Error::Error;
};

// Adjacency in the strong product: distinct vertices whose every coordinate
// pair is equal or adjacent on the cycle.
bool strong_product_adjacent(const Vertex& u, const Vertex& v, int m);

// All m^n vertices in lexicographic order.
std::vector<Vertex> enumerate_vertices(const CycleProductSpec& spec);

std::optional<std::pair<Vertex, Vertex>> find_adjacent_pair(const std::vector<Vertex>& vertices,
                                                            const CycleProductSpec& spec);
bool is_independent(const std::vector<Vertex>& vertices, const CycleProductSpec& spec);

std::vector<Vertex> greedy_independent_set_from_scores(const CycleProductSpec& spec,
                                                       const std::vector<double>& scores);

// Scores come from priority(el, num_nodes, n).
std::vector<Vertex> greedy_independent_set(const priolang::ConcreteProgram& priority,
                                           const CycleProductSpec& spec);

// Exact independence number by branch and bound with degree-guided
// branching. Throws TooLarge when m^n > 60.
int brute_force_alpha(const CycleProductSpec& spec);

} // namespace tunesearch::problems
