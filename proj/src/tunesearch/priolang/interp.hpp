#pragma once

#include <cstdint>
#include <span>

#include "tunesearch/priolang/program.hpp"

namespace tunesearch::priolang {

struct EvalLimits {
    // Primitive operations allowed per call before EvalTimeout.
    std::uint64_t max_steps = 10'000'000;
};

// Runs the program's entry function on the given arguments and returns the
// resulting number. Pure: identical (program, args) give identical results.
// Throws EvalError / EvalTimeout.
double eval_priority(const ConcreteProgram& cp, std::span<const Value> args,
                     const EvalLimits& limits = {});

} // namespace tunesearch::priolang
