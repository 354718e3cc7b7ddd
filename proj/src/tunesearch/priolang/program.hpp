#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tunesearch/priolang/ast.hpp"
#include "tunesearch/priolang/value.hpp"

namespace tunesearch::priolang {

using BigInt = boost::multiprecision::cpp_int;

enum class Origin { Llm, Seed, Compacted, User };

struct SourceProgram {
    std::string text;
    Origin origin = Origin::User;
};

// One literal option of a tunable site. The original lexeme is kept so that
// substitution and compaction splice source text byte-faithfully.
struct TunableOption {
    Value value;
    std::string lexeme;
};

struct TunableSite {
    int site_id = 0;                  // 0-based, source order
    std::vector<TunableOption> options;
    std::size_t span_begin = 0;       // byte offsets of the tunable(...) call
    std::size_t span_end = 0;
};

struct TunableProgram {
    SourceProgram source;
    std::string function_name; // last function defined
    std::vector<TunableSite> sites;
    std::shared_ptr<const Module> module;
};

struct DecisionVector {
    std::vector<int> indices;

    bool operator==(const DecisionVector&) const = default;
};

struct ConcreteProgram {
    std::string text;
    std::string function_name;
    std::shared_ptr<const Module> module;
    DecisionVector decision; // empty when the parent had no sites
};

// Parses source text into a tunable program. Sites appear in left-to-right
// source order. Throws ParseError / TunableError.
TunableProgram parse(const SourceProgram& source);

// |X| = product of per-site option counts (1 for a site-free program).
BigInt solution_space_size(const TunableProgram& tp);

// Replaces every site with the literal chosen by dv. The returned text is
// the original text with only the tunable calls spliced out, so a site-free
// program round-trips unchanged. Throws std::out_of_range on a bad index.
ConcreteProgram substitute(const TunableProgram& tp, const DecisionVector& dv);

// Rewrites tp keeping, per site, only the options selected by `kept`.
// Single-survivor sites have the tunable construct removed and the literal
// inlined; others keep a reduced option list in original order.
SourceProgram compact(const TunableProgram& tp, const std::vector<DecisionVector>& kept);

} // namespace tunesearch::priolang
