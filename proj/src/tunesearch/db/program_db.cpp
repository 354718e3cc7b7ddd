#include "tunesearch/db/program_db.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "tunesearch/db/clustering.hpp"

namespace tunesearch::db {

int ProgramDatabase::insert(ProgramEntry entry) {
    entry.id = static_cast<int>(entries_.size());
    entries_.push_back(std::move(entry));
    return entries_.back().id;
}

std::size_t ProgramDatabase::sampleable_count() const {
    std::size_t count = 0;
    for (const ProgramEntry& e : entries_) count += e.valid;
    return count;
}

const ProgramEntry& ProgramDatabase::best() const {
    const ProgramEntry* best = nullptr;
    for (const ProgramEntry& e : entries_) {
        if (!e.valid) continue;
        if (!best || e.score > best->score) best = &e;
    }
    if (!best) throw EmptyDatabaseError("database has no valid entry");
    return *best;
}

void ProgramDatabase::persist(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    for (const ProgramEntry& e : entries_) {
        nlohmann::json j{
            {"id", e.id},
            {"source", e.source},
            {"score", e.score},
            {"valid", e.valid},
            {"parent_ids", e.parent_ids},
            {"created_round", e.created_round},
            {"process_id", e.process_id},
        };
        out << j.dump() << "\n";
    }
}

ProgramDatabase ProgramDatabase::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    ProgramDatabase db;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            ProgramEntry e;
            e.id = j.at("id").get<int>();
            e.source = j.at("source").get<std::string>();
            e.score = j.at("score").get<double>();
            e.valid = j.at("valid").get<bool>();
            e.parent_ids = j.at("parent_ids").get<std::vector<int>>();
            e.created_round = j.at("created_round").get<int>();
            e.process_id = j.at("process_id").get<int>();
            db.entries_.push_back(std::move(e));
        } catch (const nlohmann::json::exception& ex) {
            throw Error(path + ":" + std::to_string(line_no) + ": " + ex.what());
        }
    }
    return db;
}

ClusterPartition partition(const ProgramDatabase& db, int k_cluster) {
    // Group ids by distinct score, highest first.
    std::map<double, std::vector<int>, std::greater<double>> by_score;
    for (const ProgramEntry& e : db.entries())
        if (e.valid) by_score[e.score].push_back(e.id);
    if (by_score.empty()) throw EmptyDatabaseError("database has no valid entry");

    ClusterPartition part;
    if (static_cast<int>(by_score.size()) < k_cluster) {
        for (auto& [score, ids] : by_score) part.clusters.push_back(std::move(ids));
        return part;
    }

    auto it = by_score.begin();
    part.clusters.push_back(it->second);
    ++it;

    // One k-means point per distinct score, regardless of how many programs
    // share it.
    std::vector<double> scores;
    std::vector<std::vector<int>> groups;
    for (; it != by_score.end(); ++it) {
        scores.push_back(it->first);
        groups.push_back(it->second);
    }
    std::vector<int> labels = kmeans_1d(scores, k_cluster - 1);

    struct Bucket {
        double max_score = 0.0;
        std::vector<int> ids;
    };
    std::map<int, Bucket> buckets;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        Bucket& b = buckets[labels[i]];
        if (b.ids.empty() || scores[i] > b.max_score) b.max_score = scores[i];
        b.ids.insert(b.ids.end(), groups[i].begin(), groups[i].end());
    }
    std::vector<Bucket> ordered;
    for (auto& [label, bucket] : buckets) ordered.push_back(std::move(bucket));
    std::sort(ordered.begin(), ordered.end(),
              [](const Bucket& a, const Bucket& b) { return a.max_score > b.max_score; });
    for (Bucket& b : ordered) part.clusters.push_back(std::move(b.ids));
    return part;
}

std::vector<ProgramEntry> sample_refs(const ProgramDatabase& db, const SamplerConfig& cfg,
                                      Rng& rng) {
    ClusterPartition part = partition(db, cfg.k_cluster);
    std::vector<double> probs = cluster_probs(static_cast<int>(part.clusters.size()), cfg.p0);

    std::vector<ProgramEntry> refs;
    refs.reserve(static_cast<std::size_t>(cfg.k_ref));
    for (int i = 0; i < cfg.k_ref; ++i) {
        const auto& cluster = part.clusters[rng.next_index(probs)];
        int id = cluster[rng.next_below(cluster.size())];
        refs.push_back(db.entry(id));
    }
    return refs;
}

} // namespace tunesearch::db
