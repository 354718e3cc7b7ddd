#include "tunesearch/evolve/prompt.hpp"

#include <fstream>

#include <json.hpp>

#include "tunesearch/priolang/render.hpp"

namespace tunesearch::evolve {

namespace {

const char* kEvolutionInstruction =
    "Develop an improved implementation based on the provided reference "
    "implementations. You are free to restructure the computation; unexpected "
    "changes might lead to breakthroughs.";

const char* kTunableMarkerInstruction =
    "Where you are unsure about a constant, write tunable([v1, v2, ...]) in its "
    "place, listing candidate literal values. Every tunable marks a decision "
    "that will be searched automatically, so prefer a few well-chosen options "
    "per tunable over a single guess.";

} // namespace

PromptTemplate default_template(const std::string& problem) {
    PromptTemplate t;
    t.evolution_instruction = kEvolutionInstruction;
    t.tunable_marker_instruction = kTunableMarkerInstruction;
    if (problem == "capset") {
        t.problem_description =
            "Find a large cap set in dimension n: a set of n-dimensional vectors "
            "over {0, 1, 2} such that no three distinct vectors sum to the zero "
            "vector modulo 3.";
        t.task_description =
            "Write a function priority(el, n) that assigns a numeric priority to "
            "the candidate vector el (a tuple of n values in {0, 1, 2}). A greedy "
            "constructor considers candidates in order of decreasing priority and "
            "adds each one that keeps the set a cap set. Higher scores for better "
            "candidates yield larger cap sets.";
        t.scoring_heuristic_hint =
            "The score is computed based on the relationships among el[i], el[-i], "
            "el[(i - k) % n], and el[(i + k) % n].";
    } else if (problem == "admissible") {
        t.problem_description =
            "Find a large admissible set A(n, w): vectors over {0, 1, 2} of length "
            "n with exactly w nonzero entries, such that every three distinct "
            "vectors have some coordinate at which their three values are "
            "pairwise distinct.";
        t.task_description =
            "Write a function priority(el, n, w) that assigns a numeric priority "
            "to the candidate vector el. A greedy constructor considers candidates "
            "in order of decreasing priority and adds each one that keeps the set "
            "admissible.";
        t.scoring_heuristic_hint =
            "The score is computed based on the relationships among el[i], el[-i], "
            "el[(i - k) % n], and el[(i + k) % n].";
    } else if (problem == "cycle") {
        t.problem_description =
            "Find a large independent set in the n-fold strong product of the "
            "cycle graph with num_nodes vertices. Two distinct product vertices "
            "are adjacent when every coordinate pair is equal or adjacent on the "
            "cycle.";
        t.task_description =
            "Write a function priority(el, num_nodes, n) that assigns a numeric "
            "priority to the vertex el (a tuple of n values in {0, ..., num_nodes "
            "- 1}). A greedy constructor considers vertices in order of "
            "decreasing priority and adds each one not adjacent to the set so "
            "far.";
        t.scoring_heuristic_hint =
            "The score is computed based on the relationships among el[i], el[-i], "
            "el[(i - k) % n], and el[(i + k) % n].";
    } else if (problem == "binpack") {
        t.problem_description =
            "Online bin packing: items arrive one at a time and each must be "
            "placed immediately into an open bin with enough remaining capacity, "
            "or into a new bin. The goal is to minimize the number of bins used.";
        t.task_description =
            "Write a function priority(item, bin_remaining, bins_max, num_bins, "
            "capacity) that scores placing the current item into an open bin with "
            "bin_remaining space left, where bins_max is the largest remaining "
            "capacity among open bins. The item goes to the feasible bin with the "
            "highest score.";
    } else if (problem == "toy") {
        t.problem_description =
            "Maximize the value returned by a small arithmetic function.";
        t.task_description =
            "Write a function f() with no parameters returning a number. Larger "
            "return values score higher.";
    } else {
        throw Error("no built-in prompt template for problem '" + problem + "'");
    }
    return t;
}

PromptTemplate load_template(const std::string& path, PromptTemplate defaults) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open template file '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(in);
    auto take = [&](const char* key, std::string& field) {
        if (j.contains(key)) field = j.at(key).get<std::string>();
    };
    take("problem_description", defaults.problem_description);
    take("evolution_instruction", defaults.evolution_instruction);
    take("tunable_marker_instruction", defaults.tunable_marker_instruction);
    take("task_description", defaults.task_description);
    take("scoring_heuristic_hint", defaults.scoring_heuristic_hint);
    return defaults;
}

namespace {

std::string renamed_source(const db::ProgramEntry& entry, int index) {
    std::string new_name = "priority_v" + std::to_string(index);
    try {
        priolang::TunableProgram tp =
            priolang::parse(priolang::SourceProgram{entry.source, priolang::Origin::User});
        priolang::Module module = tp.module->clone();
        module.functions.back().name = new_name;
        return priolang::render(module, tp.sites);
    } catch (const Error&) {
        return entry.source; // ship verbatim if it no longer parses
    }
}

} // namespace

std::string build_prompt(const std::vector<db::ProgramEntry>& refs, const PromptTemplate& t) {
    std::string prompt = t.problem_description;
    prompt += "\n\n";
    prompt += t.evolution_instruction;
    prompt += "\n";
    prompt += t.tunable_marker_instruction;
    prompt += "\n\n";
    prompt += t.task_description;
    if (!t.scoring_heuristic_hint.empty()) {
        prompt += " ";
        prompt += t.scoring_heuristic_hint;
    }
    prompt += "\n";
    if (!refs.empty()) {
        prompt += "\nReference implementations:\n\n";
        for (std::size_t i = 0; i < refs.size(); ++i) {
            prompt += renamed_source(refs[i], static_cast<int>(i));
            prompt += "\n";
        }
    }
    prompt += "\n";
    prompt += kOutputRestriction;
    prompt += "\n";
    return prompt;
}

} // namespace tunesearch::evolve
