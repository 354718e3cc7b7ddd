#pragma once

#include <string>
#include <vector>

#include "tunesearch/db/program_db.hpp"

namespace tunesearch::evolve {

// The prompt is assembled from four parts (problem description,
// instructions, task description, references) plus a fixed output
// restriction. All texts are editable per problem; the scoring heuristic
// hint, when set, is appended to the task description.
struct PromptTemplate {
    std::string problem_description;
    std::string evolution_instruction;
    std::string tunable_marker_instruction;
    std::string task_description;
    std::string scoring_heuristic_hint;
};

inline constexpr const char* kOutputRestriction =
    "Output Python code only, without any comments.";

// Built-in template for a problem name (capset, admissible, cycle, binpack,
// toy). Throws on unknown names.
PromptTemplate default_template(const std::string& problem);

// JSON file with any subset of the template fields; missing fields fall back
// to the given defaults.
PromptTemplate load_template(const std::string& path, PromptTemplate defaults);

// Renders the full prompt. refs must already be in presentation order; they
// are renamed priority_v0, priority_v1, ... in that order.
std::string build_prompt(const std::vector<db::ProgramEntry>& refs, const PromptTemplate& t);

} // namespace tunesearch::evolve
