#include <doctest.h>

#include <random>

#include "retro/probability.hpp"

using namespace retro;

namespace doctest {
template <>
struct StringMaker<Probability> {
    static String convert(const Probability& p) { return to_string(p).c_str(); }
};
}  // namespace doctest

TEST_SUITE("probability") {

TEST_CASE("estimative words map to Kent's intervals") {
    const auto probable = from_poetic("probable");
    CHECK(probable.kind() == ProbabilityKind::interval);
    CHECK(probable.low() == 0.63);
    CHECK(probable.high() == 0.87);
    CHECK(probable.source_word() == "probable");

    const auto certainty = from_poetic("certainty");
    CHECK(certainty.is_exact());
    CHECK(certainty.low() == 1.0);

    const auto unlikely = from_poetic("almost certainly not");
    CHECK(unlikely.low() == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(unlikely.high() == doctest::Approx(0.12).epsilon(1e-12));

    CHECK(from_poetic("impossibility") == Probability::exact(0.0));
    CHECK(from_poetic("almost certain").low() == 0.87);
    CHECK(from_poetic("almost certain").high() == 0.99);
    CHECK(from_poetic("chances about even").low() == 0.4);
    CHECK(from_poetic("probably not").high() == 0.4);
}

TEST_CASE("words are canonicalized before lookup") {
    CHECK(from_poetic("  Chances   About EVEN ") == from_poetic("chances about even"));
    CHECK(from_poetic("PROBABLE").source_word() == "probable");
}

TEST_CASE("unknown words are rejected with the accepted list") {
    try {
        from_poetic("likely");
        FAIL("expected rejection");
    } catch (const UnknownPoeticWord& e) {
        const std::string msg = e.what();
        CHECK(msg.find("likely") != std::string::npos);
        for (const auto& entry : kPoeticTable) CHECK(msg.find(entry.word) != std::string::npos);
    }
    CHECK_THROWS_AS(from_poetic(""), UnknownPoeticWord);
    CHECK_THROWS_AS(from_poetic("probable-ish"), UnknownPoeticWord);
}

TEST_CASE("every table row survives a render/parse round trip") {
    for (const auto& entry : kPoeticTable) {
        const auto p = from_poetic(entry.word);
        CHECK(p.midpoint() == doctest::Approx(entry.center).epsilon(1e-12));
        if (p.source_word()) CHECK(from_poetic(*p.source_word()) == p);
        CHECK(find_poetic(std::string(entry.word))->word == entry.word);
    }
}

TEST_CASE("products") {
    const auto p = product(Probability::exact(0.6), Probability::exact(0.7));
    CHECK(p.is_exact());
    CHECK(p.low() == doctest::Approx(0.42).epsilon(1e-15));

    const auto probable = from_poetic("probable");
    CHECK(product(Probability::exact(1.0), probable) == probable);
    CHECK(product(probable, Probability::exact(1.0)) == probable);
    CHECK(product(Probability::exact(1.0), Probability::exact(0.3)) == Probability::exact(0.3));

    const auto half = product(probable, Probability::exact(0.5));
    CHECK(half.kind() == ProbabilityKind::interval);
    CHECK(half.low() == doctest::Approx(0.315).epsilon(1e-12));
    CHECK(half.high() == doctest::Approx(0.435).epsilon(1e-12));
    CHECK_FALSE(half.source_word().has_value());
}

TEST_CASE("complements") {
    CHECK(complement(Probability::exact(0.3)) == Probability::exact(0.7));
    CHECK(complement(Probability::exact(0.0)) == Probability::exact(1.0));
    const auto c = complement(from_poetic("probable"));
    CHECK(c.low() == 0.13);
    CHECK(c.high() == 0.37);
}

TEST_CASE("comparison policies") {
    CHECK(compare(Probability::exact(0.5), Probability::exact(0.5)) == std::weak_ordering::equivalent);
    CHECK(compare(from_poetic("probable"), from_poetic("probably not"), ComparisonPolicy::conservative) ==
          std::weak_ordering::greater);
    CHECK(compare(from_poetic("probably not"), from_poetic("probable"), ComparisonPolicy::conservative) ==
          std::weak_ordering::less);
    CHECK(compare(from_poetic("chances about even"), Probability::exact(0.55), ComparisonPolicy::conservative) ==
          std::weak_ordering::equivalent);
    CHECK(compare(from_poetic("chances about even"), Probability::exact(0.55), ComparisonPolicy::midpoint) ==
          std::weak_ordering::less);
}

TEST_CASE("construction rejects values outside the unit interval") {
    CHECK_THROWS_AS(Probability::exact(1.5), std::invalid_argument);
    CHECK_THROWS_AS(Probability::exact(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(Probability::interval(0.6, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(Probability::exact(std::nan("")), std::invalid_argument);
}

TEST_CASE("rendering") {
    CHECK(to_string(product(product(Probability::exact(0.6), Probability::exact(0.7)), Probability::exact(0.95))) ==
          "0.399");
    CHECK(to_string(from_poetic("probable")) == "probable [0.63, 0.87]");
    CHECK(to_string(Probability::interval(0.315, 0.435)) == "[0.315, 0.435]");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.0) == "0");
}

TEST_CASE("algebraic properties") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> grid(0, 1000000000);
    std::uniform_int_distribution<int> word(0, (int)kPoeticTable.size() - 1);
    const auto random_probability = [&]() {
        if (grid(rng) % 2 == 0) return Probability::exact(grid(rng) / 1e9);
        return from_poetic(kPoeticTable[word(rng)].word);
    };

    for (int i = 0; i < 2000; ++i) {
        const auto a = random_probability();
        const auto b = random_probability();
        const auto c = random_probability();

        const auto back = complement(complement(a));
        CHECK(back.low() == a.low());
        CHECK(back.high() == a.high());
        CHECK(back.kind() == a.kind());
        CHECK(product(a, b).midpoint() == doctest::Approx(product(b, a).midpoint()).epsilon(1e-12));
        CHECK(product(product(a, b), c).midpoint() ==
              doctest::Approx(product(a, product(b, c)).midpoint()).epsilon(1e-12));

        if (a.is_exact() && b.is_exact()) {
            CHECK(compare(a, b, ComparisonPolicy::midpoint) == compare(a, b, ComparisonPolicy::conservative));
        }
    }
}

}  // TEST_SUITE
