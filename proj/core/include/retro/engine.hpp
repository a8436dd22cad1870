#pragma once

#include "retro/argumentation.hpp"
#include "retro/scenario_io.hpp"

namespace retro {

/// The single entry point shared by the CLI and the HTTP service: validates
/// the document in its own mode, then decides with one utilitarian
/// principle plus one principle per forbidden state. Throws ScenarioError
/// (Kind::validation) when validation reports errors.
DecisionResult run_retrospection(const ScenarioDocument& document);

}  // namespace retro
