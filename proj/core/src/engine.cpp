#include "retro/engine.hpp"

namespace retro {

DecisionResult run_retrospection(const ScenarioDocument& document) {
    const auto report = validate_problem(document.problem, document.validation);
    if (report.has_errors()) {
        throw ScenarioError(ScenarioError::Kind::validation, "",
                            "scenario failed " + std::string(to_string(document.validation)) + " validation",
                            report.lines());
    }
    return decide(document.problem, principles_for(document.problem), document.policy);
}

}  // namespace retro
