#pragma once

#include <optional>
#include <string>
#include <vector>

#include "retro/model.hpp"
#include "retro/semantics.hpp"

namespace retro {

enum class PrincipleKind { utilitarian, forbidden_state };

/// A moral principle that answers the two critical questions.
///
/// The utilitarian principle reads every utility class of the problem. A
/// forbidden-state principle guards exactly one forbidden state and uses
/// that state's label as its id.
struct Principle {
    std::string id;
    PrincipleKind kind = PrincipleKind::utilitarian;
    std::optional<ForbiddenState> forbidden;

    static Principle utilitarian();
    static Principle forbidding(const ForbiddenState& state);
};

inline constexpr std::string_view kUtilitarianId = "utilitarian";

/// One utilitarian principle followed by one principle per forbidden state.
std::vector<Principle> principles_for(const EthicalDecisionProblem& problem);

/// CQ1: did `target` fare worse than `attacker` under this principle?
/// Utilitarian: attacker's utility is strictly greater. Forbidden state:
/// target reached the state and attacker did not.
bool cq1(const Principle& principle, const BranchEvaluation& attacker, const BranchEvaluation& target);

/// CQ2: does the target's action lack a defence? Utilitarian: the
/// attacker's action expects strictly greater utility. Forbidden state:
/// the target's action runs the strictly greater risk of reaching the state.
bool cq2(const Principle& principle, const ActionExpectation& attacker_action,
         const ActionExpectation& target_action, ComparisonPolicy policy = ComparisonPolicy::midpoint);

/// Both critical questions answered positively. Branches of the same
/// action never attack each other.
bool attacks(const Principle& principle, const BranchEvaluation& attacker, const BranchEvaluation& target,
             const ProblemAssessment& assessment, ComparisonPolicy policy = ComparisonPolicy::midpoint);

}  // namespace retro
