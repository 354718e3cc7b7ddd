#include "tunesearch/search/xsearch.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <thread>

#include "tunesearch/priolang/render.hpp"

namespace tunesearch::search {

ScoreTable::ScoreTable(const priolang::TunableProgram& tp) {
    rows_.reserve(tp.sites.size());
    for (const auto& site : tp.sites)
        rows_.emplace_back(site.options.size(), kMinScore);
}

std::string VisitedMap::key(const priolang::DecisionVector& dv) {
    std::string k(dv.indices.size() * sizeof(int), '\0');
    std::memcpy(k.data(), dv.indices.data(), k.size());
    return k;
}

priolang::DecisionVector VisitedMap::decode(const std::string& k) {
    priolang::DecisionVector dv;
    dv.indices.resize(k.size() / sizeof(int));
    std::memcpy(dv.indices.data(), k.data(), k.size());
    return dv;
}

std::vector<double> standardized_softmax(std::span<const double> scores, double temperature) {
    std::size_t n = scores.size();
    std::vector<double> z(scores.begin(), scores.end());

    double mean = 0.0;
    for (double s : z) mean += s;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double s : z) var += (s - mean) * (s - mean);
    double stddev = std::sqrt(var / static_cast<double>(n));
    for (double& s : z) s = (s - mean) / (stddev + 1e-9);

    double hi = *std::max_element(z.begin(), z.end());
    double total = 0.0;
    for (double& s : z) {
        s = std::exp((s - hi) / temperature);
        total += s;
    }
    for (double& s : z) s /= total;
    return z;
}

namespace {

std::vector<std::vector<double>> site_distributions(const ScoreTable& table, double temperature) {
    std::vector<std::vector<double>> probs;
    probs.reserve(table.rows().size());
    for (const auto& row : table.rows()) {
        // An option never part of a successful evaluation takes the row
        // maximum, which keeps it competitive for exploration.
        std::vector<double> scores = row;
        double hi = *std::max_element(scores.begin(), scores.end());
        for (double& s : scores)
            if (s == kMinScore) s = hi;
        probs.push_back(standardized_softmax(scores, temperature));
    }
    return probs;
}

} // namespace

std::vector<priolang::DecisionVector> sample_batch(const ScoreTable& table,
                                                   const VisitedMap& visited,
                                                   const XSearchConfig& cfg, Rng& rng) {
    std::vector<std::vector<double>> probs = site_distributions(table, cfg.temperature);

    std::vector<priolang::DecisionVector> batch;
    std::vector<priolang::DecisionVector> seen_this_batch;
    const int budget = cfg.attempts_budget();
    for (int slot = 0; slot < cfg.batch_size; ++slot) {
        bool found = false;
        for (int attempt = 0; attempt < budget && !found; ++attempt) {
            priolang::DecisionVector dv;
            dv.indices.reserve(probs.size());
            for (const auto& p : probs)
                dv.indices.push_back(static_cast<int>(rng.next_index(p)));
            if (visited.contains(dv)) continue;
            if (std::find(seen_this_batch.begin(), seen_this_batch.end(), dv) !=
                seen_this_batch.end())
                continue;
            seen_this_batch.push_back(dv);
            batch.push_back(std::move(dv));
            found = true;
        }
        if (!found) {
            if (batch.empty())
                throw ExhaustedError("no unvisited decision vector within the attempt budget");
            break;
        }
    }
    return batch;
}

StallSignal apply_scores(
    const std::vector<std::pair<priolang::DecisionVector, std::optional<double>>>& batch,
    ScoreTable& table, VisitedMap& visited, SearchState& state, int k_stall) {
    double batch_best = kMinScore;
    for (const auto& [dv, score] : batch) {
        visited.record(dv, score);
        if (!score) continue;
        batch_best = std::max(batch_best, *score);
        for (std::size_t site = 0; site < dv.indices.size(); ++site)
            table.raise(site, static_cast<std::size_t>(dv.indices[site]), *score);
    }
    if (batch_best > state.best_score) {
        state.best_score = batch_best;
        state.no_update_count = 0;
    } else {
        ++state.no_update_count;
    }
    return state.no_update_count > k_stall ? StallSignal::Terminate : StallSignal::Continue;
}

namespace {

std::vector<std::optional<double>> evaluate_batch(
    const priolang::TunableProgram& tp, const std::vector<priolang::DecisionVector>& batch,
    const problems::ProblemEvaluator& evaluate, int threads) {
    std::vector<std::optional<double>> results(batch.size());
    auto eval_one = [&](std::size_t i) {
        priolang::ConcreteProgram cp = priolang::substitute(tp, batch[i]);
        problems::Evaluation ev = evaluate.evaluate(cp);
        if (ev.valid) results[i] = ev.score;
    };
    if (threads <= 1 || batch.size() <= 1) {
        for (std::size_t i = 0; i < batch.size(); ++i) eval_one(i);
        return results;
    }
    std::vector<std::thread> pool;
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), batch.size());
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < batch.size(); i += workers) eval_one(i);
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

struct Ranked {
    priolang::DecisionVector dv;
    double score;
    std::size_t order;
};

} // namespace

XSearchOutcome run(const priolang::TunableProgram& tp, const problems::ProblemEvaluator& evaluate,
                   const XSearchConfig& cfg, const ProgressSink& sink) {
    XSearchOutcome outcome;

    if (tp.sites.empty()) {
        // Singleton solution space: exactly one evaluation.
        priolang::ConcreteProgram cp = priolang::substitute(tp, {});
        problems::Evaluation ev = evaluate.evaluate(cp);
        outcome.evaluations_used = 1;
        outcome.rounds = 1;
        if (ev.valid) {
            outcome.best_score = ev.score;
            outcome.best_program = std::move(cp);
            outcome.compacted = priolang::compact(tp, {priolang::DecisionVector{}});
        } else {
            outcome.failed = true;
        }
        if (sink) sink(ProgressRecord{1, outcome.best_score, 1});
        return outcome;
    }

    priolang::BigInt space = priolang::solution_space_size(tp);
    ScoreTable table(tp);
    VisitedMap visited;
    SearchState state;
    Rng rng(cfg.seed);

    while (priolang::BigInt(visited.size()) < space) {
        std::vector<priolang::DecisionVector> batch;
        try {
            batch = sample_batch(table, visited, cfg, rng);
        } catch (const ExhaustedError&) {
            break; // treated as normal termination: the space is searched out
        }
        std::vector<std::optional<double>> scores =
            evaluate_batch(tp, batch, evaluate, cfg.eval_threads);

        std::vector<std::pair<priolang::DecisionVector, std::optional<double>>> results;
        results.reserve(batch.size());
        for (std::size_t i = 0; i < batch.size(); ++i)
            results.emplace_back(std::move(batch[i]), scores[i]);

        StallSignal signal = apply_scores(results, table, visited, state, cfg.k_stall);
        ++outcome.rounds;
        if (sink) sink(ProgressRecord{outcome.rounds, state.best_score, visited.size()});
        if (signal == StallSignal::Terminate) break;
    }

    outcome.evaluations_used = visited.size();

    std::vector<Ranked> ranked;
    visited.for_each([&](const priolang::DecisionVector& dv, const VisitedMap::Entry& e) {
        if (e.score) ranked.push_back(Ranked{dv, *e.score, e.order});
    });
    if (ranked.empty()) {
        outcome.failed = true;
        return outcome;
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.order < b.order;
    });

    outcome.best_score = ranked[0].score;
    outcome.best_program = priolang::substitute(tp, ranked[0].dv);
    std::vector<priolang::DecisionVector> kept;
    for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(cfg.top_k); ++i)
        kept.push_back(ranked[i].dv);
    outcome.compacted = priolang::compact(tp, kept);
    return outcome;
}

} // namespace tunesearch::search
