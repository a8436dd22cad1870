#include "retro/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace retro {

StateAssignment StateAssignment::all_false(const std::vector<StateVariable>& variables) {
    StateAssignment state;
    for (const auto& v : variables) state.set(v.id, false);
    return state;
}

bool StateAssignment::at(std::string_view variable) const {
    auto it = values_.find(variable);
    if (it == values_.end()) {
        throw std::out_of_range("unknown state variable '" + std::string(variable) + "'");
    }
    return it->second;
}

const StateVariable* EthicalDecisionProblem::find_variable(std::string_view id) const {
    auto it = std::find_if(variables.begin(), variables.end(),
                           [&](const StateVariable& v) { return v.id == id; });
    return it == variables.end() ? nullptr : &*it;
}

const Action* EthicalDecisionProblem::find_action(std::string_view id) const {
    auto it = std::find_if(actions.begin(), actions.end(), [&](const Action& a) { return a.id == id; });
    return it == actions.end() ? nullptr : &*it;
}

const Branch* EthicalDecisionProblem::find_branch(std::string_view id) const {
    auto it = std::find_if(branches.begin(), branches.end(), [&](const Branch& b) { return b.id == id; });
    return it == branches.end() ? nullptr : &*it;
}

const Action* EthicalDecisionProblem::owner_of(std::string_view branch_id) const {
    for (const auto& action : actions) {
        if (std::find(action.branches.begin(), action.branches.end(), branch_id) != action.branches.end()) {
            return &action;
        }
    }
    return nullptr;
}

}  // namespace retro
