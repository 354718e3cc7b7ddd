#pragma once

#include <memory>
#include <string>

#include "tunesearch/priolang/interp.hpp"
#include "tunesearch/problems/admissible.hpp"
#include "tunesearch/problems/binpack.hpp"
#include "tunesearch/problems/capset.hpp"
#include "tunesearch/problems/cycle_graph.hpp"

namespace tunesearch::problems {

struct Evaluation {
    bool valid = false;
    double score = 0.0;
    std::string error; // set when invalid
};

// Maps a concrete program to a real-valued score. Implementations are pure
// given fixed parameters/datasets and safe to call concurrently; interpreter
// failures (including the step budget) yield an invalid evaluation rather
// than an exception.
class ProblemEvaluator {
public:
    virtual ~ProblemEvaluator() = default;
    virtual Evaluation evaluate(const priolang::ConcreteProgram& program) const = 0;
    virtual std::string name() const = 0;
};

// Score = size of the greedy cap set in F_3^n built from priority(el, n).
class CapSetEvaluator : public ProblemEvaluator {
public:
    explicit CapSetEvaluator(int n) : n_(n) {}
    Evaluation evaluate(const priolang::ConcreteProgram& program) const override;
    std::string name() const override { return "capset"; }
    int dimension() const { return n_; }

private:
    int n_;
};

// Score = size of the greedy admissible set from priority(el, n, w).
class AdmissibleEvaluator : public ProblemEvaluator {
public:
    AdmissibleEvaluator(AdmissibleParams params,
                        TriplePredicate predicate = default_triple_admissible)
        : params_(params), predicate_(std::move(predicate)) {}
    Evaluation evaluate(const priolang::ConcreteProgram& program) const override;
    std::string name() const override { return "admissible"; }
    const AdmissibleParams& params() const { return params_; }

private:
    AdmissibleParams params_;
    TriplePredicate predicate_;
};

// Score = size of the greedy independent set in C_m^{boxtimes n} from
// priority(el, num_nodes, n).
class CycleEvaluator : public ProblemEvaluator {
public:
    explicit CycleEvaluator(CycleProductSpec spec) : spec_(spec) {}
    Evaluation evaluate(const priolang::ConcreteProgram& program) const override;
    std::string name() const override { return "cycle"; }
    const CycleProductSpec& spec() const { return spec_; }

private:
    CycleProductSpec spec_;
};

// Score = negated excess over the L2 bounds across a dataset, so that
// greater is better.
class BinPackEvaluator : public ProblemEvaluator {
public:
    explicit BinPackEvaluator(std::vector<BinPackInstance> instances);
    Evaluation evaluate(const priolang::ConcreteProgram& program) const override;
    std::string name() const override { return "binpack"; }
    const std::vector<BinPackInstance>& instances() const { return instances_; }
    const std::vector<long long>& bounds() const { return bounds_; }

private:
    std::vector<BinPackInstance> instances_;
    std::vector<long long> bounds_;
};

// Calls the program with no arguments and uses the returned number as the
// score. Handy for synthetic search problems and scripted end-to-end runs.
class ToyEvaluator : public ProblemEvaluator {
public:
    Evaluation evaluate(const priolang::ConcreteProgram& program) const override;
    std::string name() const override { return "toy"; }
};

} // namespace tunesearch::problems
