#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace retro {

enum class ProbabilityKind { exact, interval };

/// How two probabilities are ordered when at least one is an interval.
///
/// `midpoint` compares (low + high) / 2 and always yields a verdict.
/// `conservative` only orders values whose intervals do not overlap;
/// overlapping intervals compare as equivalent.
enum class ComparisonPolicy { midpoint, conservative };

/// An exact probability or a closed interval [low, high] within [0, 1].
///
/// Intervals usually come from an estimative word (see from_poetic) and
/// remember that word so it can be shown back to a human.
class Probability {
public:
    /// Exact 1.
    Probability() = default;

    static Probability exact(double value);
    static Probability interval(double low, double high,
                                std::optional<std::string> source_word = std::nullopt);

    ProbabilityKind kind() const noexcept { return kind_; }
    bool is_exact() const noexcept { return kind_ == ProbabilityKind::exact; }
    double low() const noexcept { return low_; }
    double high() const noexcept { return high_; }
    double midpoint() const noexcept { return (low_ + high_) / 2.0; }
    const std::optional<std::string>& source_word() const noexcept { return word_; }

    friend bool operator==(const Probability&, const Probability&) = default;

private:
    Probability(ProbabilityKind kind, double low, double high, std::optional<std::string> word)
        : kind_(kind), low_(low), high_(high), word_(std::move(word)) {}

    ProbabilityKind kind_ = ProbabilityKind::exact;
    double low_ = 1.0;
    double high_ = 1.0;
    std::optional<std::string> word_;
};

/// Thrown by from_poetic for words outside the estimative table.
class UnknownPoeticWord : public std::invalid_argument {
public:
    explicit UnknownPoeticWord(std::string_view word);
};

struct PoeticEntry {
    std::string_view word;
    double center;
    double spread;
};

/// Kent's estimative words, most likely first. Certainty and impossibility
/// carry zero spread.
inline constexpr std::array<PoeticEntry, 7> kPoeticTable{{
    {"certainty", 1.00, 0.00},
    {"almost certain", 0.93, 0.06},
    {"probable", 0.75, 0.12},
    {"chances about even", 0.50, 0.10},
    {"probably not", 0.30, 0.10},
    {"almost certainly not", 0.07, 0.05},
    {"impossibility", 0.00, 0.00},
}};

/// Lower-cases, trims and collapses internal whitespace.
std::string canonical_poetic(std::string_view word);

/// Returns the table entry for `word` after canonicalization, if any.
std::optional<PoeticEntry> find_poetic(std::string_view word);

Probability from_poetic(std::string_view word);

Probability product(const Probability& a, const Probability& b);
Probability complement(const Probability& a);

/// Sum of probabilities of mutually exclusive outcomes, clipped to [0, 1].
Probability disjoint_sum(const Probability& a, const Probability& b);

std::weak_ordering compare(const Probability& a, const Probability& b,
                           ComparisonPolicy policy = ComparisonPolicy::midpoint);

/// Shortest decimal rendering that survives 12 significant digits,
/// e.g. 0.39899999999999997 -> "0.399".
std::string format_number(double value);

/// "0.399", "probable [0.63, 0.87]" or "[0.315, 0.435]".
std::string to_string(const Probability& p);

std::string_view to_string(ComparisonPolicy policy);
std::optional<ComparisonPolicy> parse_policy(std::string_view text);

}  // namespace retro
