#include "retro/probability.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace retro {

namespace {

constexpr double kMidpointTolerance = 1e-12;

void check_unit(double value, const char* what) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                    format_number(value));
    }
}

double clip_unit(double value) { return std::clamp(value, 0.0, 1.0); }

// 1 - x loses low-order bits when x < 0.5. Snapping to a 1e-15 grid makes
// complement an involution for any decimal-authored probability.
double snap_decimal(double value) { return std::round(value * 1e15) / 1e15; }

std::string accepted_words() {
    std::string out;
    for (const auto& entry : kPoeticTable) {
        if (!out.empty()) out += ", ";
        out += entry.word;
    }
    return out;
}

}  // namespace

Probability Probability::exact(double value) {
    check_unit(value, "probability");
    return Probability(ProbabilityKind::exact, value, value, std::nullopt);
}

Probability Probability::interval(double low, double high, std::optional<std::string> source_word) {
    check_unit(low, "interval low");
    check_unit(high, "interval high");
    if (low > high) {
        throw std::invalid_argument("interval low " + format_number(low) + " exceeds high " +
                                    format_number(high));
    }
    return Probability(ProbabilityKind::interval, low, high, std::move(source_word));
}

UnknownPoeticWord::UnknownPoeticWord(std::string_view word)
    : std::invalid_argument("unknown estimative word '" + std::string(word) +
                            "'; accepted words: " + accepted_words()) {}

std::string canonical_poetic(std::string_view word) {
    std::string out;
    bool pending_space = false;
    for (char c : word) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::optional<PoeticEntry> find_poetic(std::string_view word) {
    const std::string key = canonical_poetic(word);
    for (const auto& entry : kPoeticTable) {
        if (entry.word == key) return entry;
    }
    return std::nullopt;
}

Probability from_poetic(std::string_view word) {
    const auto entry = find_poetic(word);
    if (!entry) throw UnknownPoeticWord(word);
    if (entry->spread == 0.0) return Probability::exact(entry->center);
    return Probability::interval(snap_decimal(clip_unit(entry->center - entry->spread)),
                                 snap_decimal(clip_unit(entry->center + entry->spread)),
                                 std::string(entry->word));
}

Probability product(const Probability& a, const Probability& b) {
    if (a.is_exact() && b.is_exact()) return Probability::exact(a.low() * b.low());
    // Multiplying by an exact 1 keeps the other operand, word included.
    if (a.is_exact() && a.low() == 1.0) return b;
    if (b.is_exact() && b.low() == 1.0) return a;
    return Probability::interval(a.low() * b.low(), a.high() * b.high());
}

Probability complement(const Probability& a) {
    if (a.is_exact()) return Probability::exact(snap_decimal(1.0 - a.low()));
    return Probability::interval(snap_decimal(1.0 - a.high()), snap_decimal(1.0 - a.low()));
}

Probability disjoint_sum(const Probability& a, const Probability& b) {
    if (a.is_exact() && b.is_exact()) return Probability::exact(clip_unit(a.low() + b.low()));
    return Probability::interval(clip_unit(a.low() + b.low()), clip_unit(a.high() + b.high()));
}

std::weak_ordering compare(const Probability& a, const Probability& b, ComparisonPolicy policy) {
    if (policy == ComparisonPolicy::conservative) {
        if (a.low() > b.high()) return std::weak_ordering::greater;
        if (a.high() < b.low()) return std::weak_ordering::less;
        return std::weak_ordering::equivalent;
    }
    const double diff = a.midpoint() - b.midpoint();
    if (diff > kMidpointTolerance) return std::weak_ordering::greater;
    if (diff < -kMidpointTolerance) return std::weak_ordering::less;
    return std::weak_ordering::equivalent;
}

std::string format_number(double value) {
    if (value == 0.0) return "0";  // also folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string to_string(const Probability& p) {
    if (p.is_exact()) return format_number(p.low());
    std::string range = "[" + format_number(p.low()) + ", " + format_number(p.high()) + "]";
    if (p.source_word()) return *p.source_word() + " " + range;
    return range;
}

std::string_view to_string(ComparisonPolicy policy) {
    return policy == ComparisonPolicy::midpoint ? "midpoint" : "conservative";
}

std::optional<ComparisonPolicy> parse_policy(std::string_view text) {
    if (text == "midpoint") return ComparisonPolicy::midpoint;
    if (text == "conservative") return ComparisonPolicy::conservative;
    return std::nullopt;
}

}  // namespace retro
