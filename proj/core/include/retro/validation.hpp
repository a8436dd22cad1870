#pragma once

#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "retro/model.hpp"

namespace retro {

enum class ValidationMode { strict, lenient };

enum class Severity { warning, error };

struct Violation {
    Severity severity = Severity::error;
    std::string location;  // e.g. "actions/flip-coin", "branches/b3/events/1"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool empty() const noexcept { return violations.empty(); }
    bool has_errors() const noexcept;
    std::vector<std::string> lines() const;
};

/// Tolerance on per-action branch probability sums.
inline constexpr double kProbabilitySumTolerance = 1e-9;

/// Structural and probabilistic checks on a problem. Unknown ids are always
/// errors; branch probability sums away from 1 are errors under strict mode
/// and warnings under lenient mode.
ValidationReport validate_problem(const EthicalDecisionProblem& problem,
                                  ValidationMode mode = ValidationMode::strict);

/// Midpoint probability of a branch: product of its event midpoints.
double branch_probability_midpoint(const Branch& branch);

std::string_view to_string(ValidationMode mode);
std::optional<ValidationMode> parse_validation_mode(std::string_view text);
std::string_view to_string(Severity severity);

}  // namespace retro
