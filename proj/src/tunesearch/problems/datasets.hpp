#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tunesearch/problems/binpack.hpp"

namespace tunesearch::problems {

// OR-Library style instances: capacity 150, item sizes uniform on [20, 100].
std::vector<BinPackInstance> gen_or_dataset(std::uint64_t seed, int num_instances,
                                            int items_per_instance);

// Weibull(scale 45, shape 3) item sizes, capped at 100 and rounded to the
// nearest integer in {1..100}; capacity 100.
std::vector<BinPackInstance> gen_weibull_dataset(std::uint64_t seed, int num_instances,
                                                 int items_per_instance);

// JSON-lines persistence: one {"capacity":int,"items":[int]} object per line.
void save_dataset(const std::vector<BinPackInstance>& instances, const std::string& path);
std::vector<BinPackInstance> load_dataset(const std::string& path);

} // namespace tunesearch::problems
