#pragma once

#include <map>
#include <string>
#include <vector>

#include "retro/model.hpp"
#include "retro/probability.hpp"
#include "retro/semantics.hpp"
#include "retro/theories.hpp"

namespace retro {

/// The default retrospective claim that taking `action` was acceptable,
/// seen from the endpoint of `branch`.
struct Argument {
    std::string branch;
    std::string action;
    Probability probability;
    std::string text;
};

struct Attack {
    std::string attacker;
    std::string target;
    std::string principle;

    friend auto operator<=>(const Attack&, const Attack&) = default;
};

struct AttackGraph {
    std::vector<Argument> arguments;         // one per branch, declaration order
    std::vector<Principle> principles;       // principles the attacks were computed for
    std::vector<Attack> attacks;             // principle-major, then attacker, then target order
    std::map<std::string, bool> attacked;    // branch id -> has an incoming attack

    const Argument& argument(std::string_view branch) const;
    const Principle* principle(std::string_view id) const;
};

struct ActionAcceptability {
    std::string action;
    double acceptability = 1.0;
};

struct DecisionResult {
    std::vector<ActionAcceptability> acceptability;  // declaration order
    std::vector<std::string> selected;               // every maximizer, declaration order
    bool fully_acceptable = false;
    bool dilemma = false;
    AttackGraph graph;
    ProblemAssessment assessment;

    /// First declared maximizer.
    const std::string& default_pick() const { return selected.front(); }
    bool tie() const noexcept { return selected.size() > 1; }
    double acceptability_of(std::string_view action) const;
};

/// Ties in acceptability within this distance share the maximum.
inline constexpr double kAcceptabilityTolerance = 1e-9;

/// "s1=s2=True and s3=False" over the listed variables, in the problem's
/// declaration order.
std::string describe_state(const EthicalDecisionProblem& problem, const StateAssignment& state,
                           const std::vector<std::string>& variables);

Argument generate_argument(const EthicalDecisionProblem& problem, const BranchEvaluation& evaluation);

AttackGraph compute_attacks(const EthicalDecisionProblem& problem, const std::vector<Principle>& principles,
                            ComparisonPolicy policy = ComparisonPolicy::midpoint);
AttackGraph compute_attacks(const EthicalDecisionProblem& problem, const ProblemAssessment& assessment,
                            const std::vector<Principle>& principles, ComparisonPolicy policy);

/// Runs the retrospection: attack graph, per-action acceptability
/// (1 minus the probability of attacked branches) and the maximizing
/// actions. The problem must already be validated.
DecisionResult decide(const EthicalDecisionProblem& problem, const std::vector<Principle>& principles,
                      ComparisonPolicy policy = ComparisonPolicy::midpoint);

/// decide() with principles_for(problem).
DecisionResult decide(const EthicalDecisionProblem& problem, ComparisonPolicy policy = ComparisonPolicy::midpoint);

/// Renders every attack as a claim/rebuttal exchange, grouped by principle,
/// followed by the selection rationale.
std::string explain(const DecisionResult& result);

}  // namespace retro
