#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tunesearch/common/errors.hpp"
#include "tunesearch/common/rng.hpp"
#include "tunesearch/priolang/program.hpp"
#include "tunesearch/problems/evaluators.hpp"

namespace tunesearch::search {

inline constexpr double kMinScore = -1e10;

// No unvisited decision vector could be found within the attempt budget.
struct ExhaustedError : Error {
    using Error::Error;
};

struct XSearchConfig {
    int batch_size = 64;
    double temperature = 1.0;
    int k_stall = 3;            // consecutive non-improving rounds before stop
    int top_k = 1;              // decisions kept by compaction
    int max_sample_attempts = 0; // rejection cap per batch slot; 0 = 100 * batch_size
    int eval_threads = 1;       // parallel evaluations inside a batch
    std::uint64_t seed = 0;

    int attempts_budget() const {
        return max_sample_attempts > 0 ? max_sample_attempts : 100 * batch_size;
    }
};

// Best score observed per (site, option); entries start at kMinScore and
// only ever increase.
class ScoreTable {
public:
    explicit ScoreTable(const priolang::TunableProgram& tp);

    double get(std::size_t site, std::size_t option) const { return rows_[site][option]; }
    void raise(std::size_t site, std::size_t option, double score) {
        double& cell = rows_[site][option];
        if (score > cell) cell = score;
    }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

private:
    std::vector<std::vector<double>> rows_;
};

// Each decision vector is evaluated at most once per run.
class VisitedMap {
public:
    struct Entry {
        std::optional<double> score; // nullopt = invalid program
        std::size_t order = 0;       // evaluation order
    };

    bool contains(const priolang::DecisionVector& dv) const { return map_.count(key(dv)) > 0; }
    void record(const priolang::DecisionVector& dv, std::optional<double> score) {
        map_.emplace(key(dv), Entry{score, map_.size()});
    }
    std::size_t size() const { return map_.size(); }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [k, entry] : map_) fn(decode(k), entry);
    }

private:
    static std::string key(const priolang::DecisionVector& dv);
    static priolang::DecisionVector decode(const std::string& k);
    std::unordered_map<std::string, Entry> map_;
};

// Per-site standardized softmax: unseen options (still at kMinScore) take
// the row maximum first, then scores are shifted/scaled to zero mean and
// unit deviation before exponentiation.
std::vector<double> standardized_softmax(std::span<const double> scores, double temperature);

// Draws up to cfg.batch_size fresh decision vectors: per-site independent
// softmax sampling with rejection of already-visited vectors. May return
// fewer than batch_size; throws ExhaustedError when not even one fresh
// vector turns up within the per-slot attempt budget.
std::vector<priolang::DecisionVector> sample_batch(const ScoreTable& table,
                                                   const VisitedMap& visited,
                                                   const XSearchConfig& cfg, Rng& rng);

enum class StallSignal { Continue, Terminate };

struct SearchState {
    double best_score = kMinScore;
    int no_update_count = 0;
};

// Back-propagates batch scores to the table (max per decision), records all
// results in the visited map, and updates the stall counter. Invalid results
// consume a visited slot but never touch the table.
StallSignal apply_scores(
    const std::vector<std::pair<priolang::DecisionVector, std::optional<double>>>& batch,
    ScoreTable& table, VisitedMap& visited, SearchState& state, int k_stall);

struct ProgressRecord {
    int round = 0;
    double best_score = kMinScore;
    std::size_t evaluations = 0;
};
using ProgressSink = std::function<void(const ProgressRecord&)>;

struct XSearchOutcome {
    bool failed = false; // every evaluated program was invalid
    double best_score = kMinScore;
    priolang::ConcreteProgram best_program;
    priolang::SourceProgram compacted;
    std::size_t evaluations_used = 0;
    int rounds = 0;
};

// Full search: sample -> evaluate -> back-propagate until the stall limit or
// the space is exhausted, then compact with the top_k highest-scoring
// decisions (ties broken by earlier evaluation).
XSearchOutcome run(const priolang::TunableProgram& tp, const problems::ProblemEvaluator& evaluate,
                   const XSearchConfig& cfg, const ProgressSink& sink = {});

} // namespace tunesearch::search
