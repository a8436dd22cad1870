#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "retro/model.hpp"
#include "retro/probability.hpp"

namespace retro {

/// One component per utility class, most important first. Ordered
/// lexicographically: the first component that differs decides.
class UtilityVector {
public:
    /// Components closer than this compare as equal, absorbing rounding
    /// noise from probability-weighted sums.
    static constexpr double kTolerance = 1e-9;

    UtilityVector() = default;
    explicit UtilityVector(std::vector<double> components) : components_(std::move(components)) {}
    static UtilityVector zeros(std::size_t size) { return UtilityVector(std::vector<double>(size, 0.0)); }

    std::size_t size() const noexcept { return components_.size(); }
    double operator[](std::size_t i) const { return components_[i]; }
    double& operator[](std::size_t i) { return components_[i]; }
    const std::vector<double>& components() const noexcept { return components_; }

    /// Both operands must have the same length.
    friend std::weak_ordering operator<=>(const UtilityVector& a, const UtilityVector& b);
    friend bool operator==(const UtilityVector& a, const UtilityVector& b) {
        return (a <=> b) == std::weak_ordering::equivalent;
    }

private:
    std::vector<double> components_;
};

std::string to_string(const UtilityVector& v);

struct BranchEvaluation {
    std::string branch;
    std::string action;
    std::vector<StateAssignment> trace;  // initial state first, then one per event
    StateAssignment terminal;
    Probability probability;
    UtilityVector utility;
    std::set<std::string> violations;  // labels of forbidden states reached
};

struct ActionExpectation {
    std::string action;
    UtilityVector expected_utility;
    /// Probability of ending up in a branch that violates each forbidden
    /// state; every label in the problem has an entry.
    std::map<std::string, Probability> violation_probability;
};

/// Copy of `state` with `event.variable` set to `event.value`. Throws
/// std::out_of_range for a variable the state does not hold.
StateAssignment apply_event(const StateAssignment& state, const Event& event);

/// Utility of a single state, summed per class.
UtilityVector state_utility(const EthicalDecisionProblem& problem, const StateAssignment& state);

BranchEvaluation evaluate_branch(const EthicalDecisionProblem& problem, const Action& action,
                                 const Branch& branch);

/// Evaluates every branch of `action`, in its declared order.
std::vector<BranchEvaluation> evaluate_action(const EthicalDecisionProblem& problem, const Action& action);

ActionExpectation action_expectation(const EthicalDecisionProblem& problem, const Action& action);
ActionExpectation action_expectation(const EthicalDecisionProblem& problem, const Action& action,
                                     const std::vector<BranchEvaluation>& evaluations);

/// Every branch evaluation and action expectation of a problem, in
/// declaration order.
struct ProblemAssessment {
    std::vector<BranchEvaluation> evaluations;
    std::vector<ActionExpectation> expectations;

    const BranchEvaluation& evaluation(std::string_view branch) const;
    const ActionExpectation& expectation(std::string_view action) const;
};

ProblemAssessment assess(const EthicalDecisionProblem& problem);

}  // namespace retro
