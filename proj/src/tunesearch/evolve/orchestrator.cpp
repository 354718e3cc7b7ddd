#include "tunesearch/evolve/orchestrator.hpp"

#include <algorithm>

#include <json.hpp>

#include "tunesearch/priolang/lexer.hpp"
#include "tunesearch/priolang/render.hpp"

namespace tunesearch::evolve {

Orchestrator::Orchestrator(EvolveConfig cfg, const problems::ProblemEvaluator& evaluator,
                           std::shared_ptr<llm::Gateway> gateway, PromptTemplate prompt_template,
                           EventSink sink)
    : cfg_(std::move(cfg)), evaluator_(evaluator), gateway_(std::move(gateway)),
      prompt_template_(std::move(prompt_template)), sink_(std::move(sink)),
      halving_rng_(Rng::derive(cfg_.seed, 0x9a17, 0)) {
    processes_.resize(static_cast<std::size_t>(cfg_.k_search));
    for (int p = 0; p < cfg_.k_search; ++p) {
        processes_[static_cast<std::size_t>(p)].process_id = p;
        reset_process(processes_[static_cast<std::size_t>(p)]);
        processes_[static_cast<std::size_t>(p)].reset_count = 0;
    }
}

void Orchestrator::reset_process(SearchProcess& process) {
    process.database.clear();
    process.best_score = search::kMinScore;
    process.has_score = false;
    process.rng = Rng::derive(cfg_.seed, static_cast<std::uint64_t>(process.process_id),
                              static_cast<std::uint64_t>(process.reset_count));
    seed_database(process);
}

void Orchestrator::seed_database(SearchProcess& process) {
    if (!cfg_.seed_program) return;
    db::ProgramEntry entry;
    entry.process_id = process.process_id;
    entry.created_round = 0;
    try {
        priolang::TunableProgram tp = priolang::parse(
            priolang::SourceProgram{*cfg_.seed_program, priolang::Origin::Seed});
        search::XSearchConfig xcfg;
        xcfg.batch_size = cfg_.batch_size;
        xcfg.temperature = cfg_.temperature;
        xcfg.k_stall = cfg_.k_stall;
        xcfg.top_k = cfg_.top_k;
        xcfg.eval_threads = cfg_.eval_threads;
        xcfg.seed = process.rng.next_u64();
        search::XSearchOutcome outcome = search::run(tp, evaluator_, xcfg);
        if (outcome.failed) {
            entry.valid = false;
            entry.score = search::kMinScore;
            entry.source = priolang::render(tp);
        } else {
            entry.valid = true;
            entry.score = outcome.best_score;
            entry.source = priolang::canonical_source(outcome.compacted.text);
            process.best_score = outcome.best_score;
            process.has_score = true;
            if (!global_has_best_ || outcome.best_score > global_best_score_) {
                global_has_best_ = true;
                global_best_score_ = outcome.best_score;
                global_best_program_ = outcome.best_program.text;
            }
        }
    } catch (const priolang::ParseError&) {
        entry.valid = false;
        entry.score = search::kMinScore;
        entry.source = *cfg_.seed_program;
    }
    process.database.insert(std::move(entry));
}

StepReport Orchestrator::step(SearchProcess& process) {
    std::vector<db::ProgramEntry> refs;
    if (process.database.sampleable_count() > 0) {
        db::SamplerConfig scfg{cfg_.k_cluster, cfg_.k_ref, cfg_.p0};
        refs = db::sample_refs(process.database, scfg, process.rng);
        std::stable_sort(refs.begin(), refs.end(), [&](const auto& a, const auto& b) {
            return cfg_.refs_ascending ? a.score < b.score : a.score > b.score;
        });
    }

    llm::ChatRequest request;
    request.model = cfg_.model;
    request.messages = {{"user", build_prompt(refs, prompt_template_)}};
    request.temperature = cfg_.llm_temperature;
    request.max_tokens = cfg_.max_tokens;
    request.process_id = process.process_id;

    std::uint64_t xseed = process.rng.next_u64();

    db::ProgramEntry entry;
    entry.process_id = process.process_id;
    entry.created_round = process.llm_calls_made;
    for (const db::ProgramEntry& ref : refs) entry.parent_ids.push_back(ref.id);
    entry.valid = false;
    entry.score = search::kMinScore;

    StepReport report;
    report.process_id = process.process_id;

    std::string response;
    bool transport_ok = true;
    try {
        response = gateway_->complete(request); // may throw BudgetExhausted
    } catch (const llm::BudgetExhausted&) {
        throw;
    } catch (const llm::ScriptExhausted&) {
        throw;
    } catch (const llm::TransportError&) {
        transport_ok = false;
        entry.source = "";
    } catch (const llm::MalformedResponse&) {
        transport_ok = false;
        entry.source = "";
    }
    report.call_index = gateway_->budget().used();

    if (transport_ok) {
        try {
            priolang::SourceProgram source = llm::extract_program(response);
            priolang::TunableProgram tp = priolang::parse(source);

            search::XSearchConfig xcfg;
            xcfg.batch_size = cfg_.batch_size;
            xcfg.temperature = cfg_.temperature;
            xcfg.k_stall = cfg_.k_stall;
            xcfg.top_k = cfg_.top_k;
            xcfg.eval_threads = cfg_.eval_threads;
            xcfg.seed = xseed;
            search::XSearchOutcome outcome = search::run(tp, evaluator_, xcfg);
            if (outcome.failed) {
                entry.source = priolang::render(tp);
            } else {
                entry.valid = true;
                entry.score = outcome.best_score;
                entry.source = priolang::canonical_source(outcome.compacted.text);
                if (!process.has_score || outcome.best_score > process.best_score) {
                    process.best_score = outcome.best_score;
                    process.has_score = true;
                }
                if (!global_has_best_ || outcome.best_score > global_best_score_) {
                    global_has_best_ = true;
                    global_best_score_ = outcome.best_score;
                    global_best_program_ = outcome.best_program.text;
                }
            }
        } catch (const llm::NoProgramFound&) {
            entry.source = response;
        } catch (const priolang::ParseError&) {
            entry.source = response;
        }
    }

    report.valid = entry.valid;
    report.score = entry.score;
    report.entry_id = process.database.insert(std::move(entry));
    ++process.llm_calls_made;
    return report;
}

void Orchestrator::halve(std::uint64_t call_index, RunReport& report) {
    int to_restart = cfg_.k_search / 2;
    if (to_restart == 0) return;

    struct Ranked {
        int process;
        bool has_score;
        double score;
        std::uint64_t tiebreak;
    };
    std::vector<Ranked> ranked;
    for (const SearchProcess& p : processes_)
        ranked.push_back(Ranked{p.process_id, p.has_score, p.best_score, halving_rng_.next_u64()});
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.has_score != b.has_score) return !a.has_score; // scoreless ranks lowest
        if (a.score != b.score) return a.score < b.score;
        return a.tiebreak < b.tiebreak; // ties picked uniformly at random
    });

    HalvingEvent event;
    event.call_index = call_index;
    for (int i = 0; i < to_restart; ++i) {
        SearchProcess& p = processes_[static_cast<std::size_t>(ranked[i].process)];
        ++p.reset_count;
        reset_process(p);
        event.restarted.push_back(p.process_id);
    }
    std::sort(event.restarted.begin(), event.restarted.end());

    nlohmann::json j{{"event", "halving"}, {"call", event.call_index}, {"restarted", event.restarted}};
    emit(j.dump());
    report.halvings.push_back(std::move(event));
}

RunReport Orchestrator::run() {
    RunReport report;
    report.process_trajectories.assign(static_cast<std::size_t>(cfg_.k_search), {});

    int next_process = 0;
    while (true) {
        SearchProcess& process = processes_[static_cast<std::size_t>(next_process)];
        StepReport step_report;
        try {
            step_report = step(process);
        } catch (const llm::BudgetExhausted&) {
            break;
        }
        next_process = (next_process + 1) % cfg_.k_search;

        report.process_trajectories[static_cast<std::size_t>(step_report.process_id)].push_back(
            process.has_score ? process.best_score : search::kMinScore);

        nlohmann::json j{{"event", "call"},
                         {"call", step_report.call_index},
                         {"process", step_report.process_id},
                         {"valid", step_report.valid},
                         {"score", step_report.score}};
        if (global_has_best_) j["best"] = global_best_score_;
        emit(j.dump());
        report.steps.push_back(step_report);

        std::uint64_t used = gateway_->budget().used();
        if (cfg_.k_reset > 0 && used % static_cast<std::uint64_t>(cfg_.k_reset) == 0)
            halve(used, report);
        if (used >= gateway_->budget().limit()) break;
    }

    report.total_calls = gateway_->budget().used();
    report.has_best = global_has_best_;
    report.best_score = global_best_score_;
    report.best_program = global_best_program_;
    for (const SearchProcess& p : processes_) report.reset_counts.push_back(p.reset_count);
    return report;
}

} // namespace tunesearch::evolve
