#pragma once

#include "retro/probability.hpp"
#include "retro/model.hpp"
#include "retro/validation.hpp"
#include "retro/semantics.hpp"
#include "retro/theories.hpp"
#include "retro/argumentation.hpp"
#include "retro/scenario_io.hpp"
#include "retro/graph_export.hpp"
#include "retro/engine.hpp"
