#pragma once

#include <string>
#include <vector>

#include "tunesearch/common/errors.hpp"
#include "tunesearch/common/rng.hpp"

namespace tunesearch::db {

struct EmptyDatabaseError : Error {
    using Error::Error;
};

struct ProgramEntry {
    int id = -1;
    std::string source; // canonical program text
    double score = 0.0;
    bool valid = false;
    std::vector<int> parent_ids; // reference entries used to generate this one
    int created_round = 0;
    int process_id = 0;

    bool operator==(const ProgramEntry&) const = default;
};

// Ordered score clusters over the valid entries: cluster 0 holds exactly the
// entries sharing the single highest distinct score; clusters are disjoint,
// cover all valid entries and descend by maximum member score.
struct ClusterPartition {
    std::vector<std::vector<int>> clusters; // entry ids
};

struct SamplerConfig {
    int k_cluster = 10;
    int k_ref = 2;
    double p0 = 0.5;
};

class ProgramDatabase {
public:
    // Assigns the next id and stores the entry. Invalid entries are kept for
    // audit but never sampled as references.
    int insert(ProgramEntry entry);

    const std::vector<ProgramEntry>& entries() const { return entries_; }
    const ProgramEntry& entry(int id) const { return entries_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const { return entries_.size(); }
    std::size_t sampleable_count() const;

    // Highest-scoring valid entry (earliest wins ties); throws
    // EmptyDatabaseError when no valid entry exists.
    const ProgramEntry& best() const;

    void clear() { entries_.clear(); }

    // JSON-lines persistence, one entry per line, lossless round trip.
    void persist(const std::string& path) const;
    static ProgramDatabase load(const std::string& path);

    bool operator==(const ProgramDatabase&) const = default;

private:
    std::vector<ProgramEntry> entries_;
};

// Groups valid entries by distinct score (descending). With fewer distinct
// scores than k_cluster each distinct score forms its own cluster; otherwise
// the top score is split off and the remaining distinct scores (one k-means
// point each, however many programs share them) are clustered with
// k_cluster - 1 centers.
ClusterPartition partition(const ProgramDatabase& db, int k_cluster);

// Draws cfg.k_ref clusters i.i.d. (with replacement) from the geometric
// cluster distribution, then one entry uniformly from each drawn cluster.
std::vector<ProgramEntry> sample_refs(const ProgramDatabase& db, const SamplerConfig& cfg, Rng& rng);

} // namespace tunesearch::db
