#pragma once

#include <span>
#include <string>

#include "tunesearch/priolang/program.hpp"

namespace tunesearch::priolang {

// Canonical source renderer: 4-space indentation, one statement per line,
// normalized literals, minimal parentheses. parse(render(parse(s))) yields
// the same tree as parse(s).
std::string render(const Module& module, std::span<const TunableSite> sites);
std::string render(const TunableProgram& tp);
std::string render(const ConcreteProgram& cp);

// Shortest round-trip formatting for a numeric literal.
std::string format_number(double v);

// parse + render in one step.
std::string canonical_source(const std::string& text);

} // namespace tunesearch::priolang
