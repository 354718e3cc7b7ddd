#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tunesearch/db/program_db.hpp"
#include "tunesearch/evolve/prompt.hpp"
#include "tunesearch/llm/gateway.hpp"
#include "tunesearch/problems/evaluators.hpp"
#include "tunesearch/search/xsearch.hpp"

namespace tunesearch::evolve {

struct EvolveConfig {
    int k_search = 4;
    int k_reset = 1600; // halving period in total LLM calls; 0 disables halving
    int k_ref = 2;
    int k_cluster = 10;
    int k_stall = 3;
    int top_k = 1;
    double p0 = 0.5;
    std::uint64_t budget = 100;
    int batch_size = 64;
    double temperature = 1.0;     // X-search softmax temperature
    double llm_temperature = 1.0; // request sampling temperature
    int max_tokens = 4096;
    int eval_threads = 1;
    std::uint64_t seed = 0;
    std::string model;
    bool refs_ascending = true; // weakest reference first in the prompt
    std::optional<std::string> seed_program;
};

// One of the k_search parallel search processes. Owns its database and RNG;
// nothing is ever copied between processes.
struct SearchProcess {
    int process_id = 0;
    db::ProgramDatabase database;
    Rng rng{0};
    double best_score = search::kMinScore;
    bool has_score = false;
    int reset_count = 0;
    int llm_calls_made = 0;
};

struct StepReport {
    std::uint64_t call_index = 0; // global, 1-based
    int process_id = 0;
    bool valid = false;
    double score = 0.0;
    int entry_id = -1;
};

struct HalvingEvent {
    std::uint64_t call_index = 0;
    std::vector<int> restarted;
};

struct RunReport {
    std::uint64_t total_calls = 0;
    bool has_best = false;
    double best_score = 0.0;
    std::string best_program; // concrete program text of the global best
    std::vector<StepReport> steps;
    std::vector<HalvingEvent> halvings;
    std::vector<int> reset_counts;                        // per process
    std::vector<std::vector<double>> process_trajectories; // best after each own call
};

// Serialized JSON event lines (one per LLM call / halving).
using EventSink = std::function<void(const std::string&)>;

class Orchestrator {
public:
    Orchestrator(EvolveConfig cfg, const problems::ProblemEvaluator& evaluator,
                 std::shared_ptr<llm::Gateway> gateway, PromptTemplate prompt_template,
                 EventSink sink = {});

    // One pipeline pass for a process: sample references, call the model,
    // parse, search the solution space, store the compacted result. Throws
    // BudgetExhausted before consuming anything once the budget is spent.
    StepReport step(SearchProcess& process);

    // Round-robin over processes with adaptive halving every k_reset calls.
    RunReport run();

    const std::vector<SearchProcess>& processes() const { return processes_; }
    const llm::Gateway& gateway() const { return *gateway_; }

private:
    void reset_process(SearchProcess& process);
    void seed_database(SearchProcess& process);
    void halve(std::uint64_t call_index, RunReport& report);
    void emit(const std::string& line) {
        if (sink_) sink_(line);
    }

    EvolveConfig cfg_;
    const problems::ProblemEvaluator& evaluator_;
    std::shared_ptr<llm::Gateway> gateway_;
    PromptTemplate prompt_template_;
    EventSink sink_;

    std::vector<SearchProcess> processes_;
    Rng halving_rng_{0};
    bool global_has_best_ = false;
    double global_best_score_ = 0.0;
    std::string global_best_program_;
};

} // namespace tunesearch::evolve
