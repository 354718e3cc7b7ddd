#include "tunesearch/problems/datasets.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "tunesearch/common/rng.hpp"

namespace tunesearch::problems {

std::vector<BinPackInstance> gen_or_dataset(std::uint64_t seed, int num_instances,
                                            int items_per_instance) {
    Rng rng(seed);
    std::vector<BinPackInstance> out;
    out.reserve(static_cast<std::size_t>(num_instances));
    for (int i = 0; i < num_instances; ++i) {
        BinPackInstance inst;
        inst.capacity = 150;
        inst.items.reserve(static_cast<std::size_t>(items_per_instance));
        for (int j = 0; j < items_per_instance; ++j)
            inst.items.push_back(20 + static_cast<int>(rng.next_below(81))); // [20, 100]
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<BinPackInstance> gen_weibull_dataset(std::uint64_t seed, int num_instances,
                                                 int items_per_instance) {
    Rng rng(seed);
    std::vector<BinPackInstance> out;
    out.reserve(static_cast<std::size_t>(num_instances));
    for (int i = 0; i < num_instances; ++i) {
        BinPackInstance inst;
        inst.capacity = 100;
        inst.items.reserve(static_cast<std::size_t>(items_per_instance));
        for (int j = 0; j < items_per_instance; ++j) {
            double x = std::min(rng.next_weibull(45.0, 3.0), 100.0);
            int item = static_cast<int>(std::lround(x));
            inst.items.push_back(std::clamp(item, 1, 100));
        }
        out.push_back(std::move(inst));
    }
    return out;
}

void save_dataset(const std::vector<BinPackInstance>& instances, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    for (const BinPackInstance& inst : instances) {
        nlohmann::json j{{"capacity", inst.capacity}, {"items", inst.items}};
        out << j.dump() << "\n";
    }
}

std::vector<BinPackInstance> load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::vector<BinPackInstance> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        BinPackInstance inst;
        inst.capacity = j.at("capacity").get<int>();
        inst.items = j.at("items").get<std::vector<int>>();
        out.push_back(std::move(inst));
    }
    return out;
}

} // namespace tunesearch::problems
