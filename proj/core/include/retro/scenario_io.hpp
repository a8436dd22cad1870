#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "retro/model.hpp"
#include "retro/probability.hpp"
#include "retro/validation.hpp"

namespace retro {

inline constexpr std::string_view kScenarioVersion = "1";

/// A decision problem together with how it should be run.
struct ScenarioDocument {
    std::string version{kScenarioVersion};
    std::string name;
    std::string description;
    EthicalDecisionProblem problem;
    ComparisonPolicy policy = ComparisonPolicy::midpoint;
    ValidationMode validation = ValidationMode::strict;
};

/// Failure to turn text into a usable scenario. `path` is a JSON pointer
/// for schema errors and "line L, column C" for syntax errors.
class ScenarioError : public std::runtime_error {
public:
    enum class Kind { syntax, schema, validation };

    ScenarioError(Kind kind, std::string path, std::string message, std::vector<std::string> details = {});

    Kind kind() const noexcept { return kind_; }
    const std::string& path() const noexcept { return path_; }
    const std::vector<std::string>& details() const noexcept { return details_; }

private:
    Kind kind_;
    std::string path_;
    std::vector<std::string> details_;
};

std::string_view to_string(ScenarioError::Kind kind);

/// Syntax and schema checks only.
ScenarioDocument scenario_from_json(const nlohmann::json& json);
ScenarioDocument read_scenario_document(std::string_view text);

struct ParsedScenario {
    ScenarioDocument document;
    ValidationReport report;  // warnings only; errors throw
};

/// Parses and validates, in the document's own mode unless `mode` is
/// given. Throws ScenarioError with Kind::validation when the report holds
/// errors.
ParsedScenario parse_scenario(std::string_view text, std::optional<ValidationMode> mode = std::nullopt);

/// Canonical form: every key present, initial state total, probabilities
/// as numbers, words or {low, high} objects.
nlohmann::ordered_json scenario_to_json(const ScenarioDocument& document);
std::string serialize_scenario(const ScenarioDocument& document);

/// Replacement ethics for a scenario; absent members are left alone.
struct EthicsPatch {
    std::optional<std::vector<UtilityClass>> utility_classes;
    std::optional<std::vector<ForbiddenState>> forbidden;
    std::optional<ComparisonPolicy> policy;

    bool empty() const noexcept { return !utility_classes && !forbidden && !policy; }
};

EthicsPatch ethics_from_json(const nlohmann::json& json);
EthicsPatch parse_ethics(std::string_view text);
void apply_ethics(ScenarioDocument& document, const EthicsPatch& patch);

/// Reads a probability as written in a scenario: a number in [0, 1], an
/// estimative word, or {"low", "high", "word"?}.
Probability probability_from_json(const nlohmann::json& json, const std::string& path = "");
nlohmann::ordered_json probability_to_json(const Probability& p);

}  // namespace retro
