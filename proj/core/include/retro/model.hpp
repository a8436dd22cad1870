#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retro/probability.hpp"

namespace retro {

struct StateVariable {
    std::string id;
    std::string label;
};

/// Truth values for every state variable of a problem, keyed by id.
class StateAssignment {
public:
    StateAssignment() = default;
    explicit StateAssignment(std::map<std::string, bool, std::less<>> values)
        : values_(std::move(values)) {}

    /// Every variable false.
    static StateAssignment all_false(const std::vector<StateVariable>& variables);

    bool contains(std::string_view variable) const { return values_.find(variable) != values_.end(); }
    /// Throws std::out_of_range for unknown variables.
    bool at(std::string_view variable) const;
    void set(const std::string& variable, bool value) { values_[variable] = value; }

    std::size_t size() const noexcept { return values_.size(); }
    const std::map<std::string, bool, std::less<>>& values() const noexcept { return values_; }

    friend bool operator==(const StateAssignment&, const StateAssignment&) = default;

private:
    std::map<std::string, bool, std::less<>> values_;
};

/// A single variable changing value with some probability.
struct Event {
    std::string variable;
    bool value = true;
    Probability probability;
};

/// One possible future after an action: an ordered sequence of events.
struct Branch {
    std::string id;
    std::vector<Event> events;
};

struct Action {
    std::string id;
    std::string label;
    std::vector<std::string> branches;
};

struct UtilityAssignment {
    std::string variable;
    bool value = true;
    double utility = 0.0;
};

/// A tier of utility assignments. Classes earlier in a problem's list are
/// immeasurably more important than later ones.
struct UtilityClass {
    std::vector<UtilityAssignment> assignments;
};

/// A variable/value pair some principle prohibits.
struct ForbiddenState {
    std::string variable;
    bool value = true;
    std::string label;

    friend bool operator==(const ForbiddenState&, const ForbiddenState&) = default;
};

struct EthicalDecisionProblem {
    std::vector<StateVariable> variables;
    StateAssignment initial;
    std::vector<Action> actions;
    std::vector<Branch> branches;
    std::vector<UtilityClass> utility_classes;
    std::vector<ForbiddenState> forbidden;

    const StateVariable* find_variable(std::string_view id) const;
    const Action* find_action(std::string_view id) const;
    const Branch* find_branch(std::string_view id) const;
    /// Action owning `branch_id`, or nullptr.
    const Action* owner_of(std::string_view branch_id) const;
};

}  // namespace retro
