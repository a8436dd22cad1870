#include <doctest.h>

#include <algorithm>

#include "retro/argumentation.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace retro;
using retro::testing::cross;
using retro::testing::edge_pairs;
using retro::testing::edge_set;
using retro::testing::library_with;
using retro::testing::load;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_SUITE("argumentation") {

TEST_CASE("argument text") {
    const auto result = decide(library_with("pass-only").problem);
    const auto& b1 = result.graph.argument("b1").text;
    CHECK(b1.find("s1=s2=s3=True") != std::string::npos);
    CHECK(b1.find("s4=False") != std::string::npos);
    CHECK(b1.find("with probability 0.399") != std::string::npos);
    CHECK(b1.find("the action, recommend,") != std::string::npos);
    CHECK(b1.rfind("From the initial state, I, where ", 0) == 0);

    const auto coin = decide(load("coin-apple.json").problem);
    const auto& b3 = coin.graph.argument("b3").text;
    CHECK(b3.find("s2=s3=True") != std::string::npos);
    CHECK(b3.find("probability 0.5") != std::string::npos);
}

TEST_CASE("describe_state groups true variables first") {
    const auto doc = load("library.json");
    StateAssignment s = doc.problem.initial;
    s.set("s2", true);
    CHECK(describe_state(doc.problem, s, {"s1", "s2", "s3"}) == "s2=True and s1=s3=False");
    CHECK(describe_state(doc.problem, s, {"s2"}) == "s2=True");
    CHECK(describe_state(doc.problem, doc.problem.initial, {"s1", "s4"}) == "s1=s4=False");
}

TEST_CASE("single utility: successful branches of recommend attack the failing ignore branch") {
    const auto r = decide(library_with("pass-only").problem);
    CHECK(edge_pairs(r.graph) == cross({"b1", "b2", "b5", "b6"}, {"b10"}));
    CHECK(r.default_pick() == "recommend");
    CHECK(r.acceptability_of("recommend") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.acceptability_of("ignore") == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(r.fully_acceptable);
    CHECK_FALSE(r.dilemma);
}

TEST_CASE("a penalty for being found out removes the found-out attackers") {
    const auto r = decide(library_with("pass-and-found-out").problem);
    CHECK(edge_pairs(r.graph) == cross({"b1", "b5"}, {"b10"}));
    CHECK(r.default_pick() == "recommend");
}

TEST_CASE("a heavy penalty flips the selection to ignore") {
    const auto r = decide(library_with("found-out-heavy").problem);
    auto expected = cross({"b9", "b10"}, {"b2", "b4", "b6", "b8"});
    expected.emplace("b9", "b3");
    expected.emplace("b9", "b7");
    CHECK(edge_pairs(r.graph) == expected);
    CHECK(r.default_pick() == "ignore");
    CHECK_FALSE(r.tie());
    CHECK(r.acceptability_of("ignore") == 1.0);

    const auto tiered = decide(library_with("found-out-tiered").problem);
    CHECK(edge_pairs(tiered.graph) == expected);
    CHECK(tiered.selected == r.selected);
}

TEST_CASE("a forbidden state makes recommend unacceptable") {
    const auto r = decide(library_with("data-protection").problem);
    std::size_t deontic = 0, utilitarian = 0;
    for (const auto& a : r.graph.attacks) (a.principle == "utilitarian" ? utilitarian : deontic)++;
    CHECK(deontic == 16);
    CHECK(utilitarian == 4);
    CHECK(r.acceptability_of("recommend") == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.acceptability_of("ignore") == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(r.dilemma);
    CHECK_FALSE(r.fully_acceptable);
    CHECK(r.selected == std::vector<std::string>{"ignore"});
}

TEST_CASE("coin-apple selects the gamble") {
    const auto r = decide(load("coin-apple.json").problem);
    CHECK(r.selected == std::vector<std::string>{"flip-coin"});
    CHECK(r.acceptability_of("flip-coin") == 1.0);
    CHECK(r.fully_acceptable);
}

TEST_CASE("mutual attacks cancel within a principle") {
    EthicalDecisionProblem p;
    p.variables = {{"s1", ""}, {"s2", ""}};
    p.initial = StateAssignment::all_false(p.variables);
    p.branches = {{"b1", {{"s1", true, Probability::exact(1.0)}}}, {"b2", {{"s2", true, Probability::exact(1.0)}}}};
    p.actions = {{"a", "", {"b1"}}, {"b", "", {"b2"}}};
    p.forbidden = {{"s2", true, "first"}, {"s1", true, "second"}};
    const auto r = decide(p);
    CHECK(edge_set(r.graph) == std::set<retro::testing::Edge>{{"b1", "b2", "first"}, {"b2", "b1", "second"}});
    CHECK(r.dilemma);
    CHECK(r.tie());
    CHECK(r.default_pick() == "a");
}

TEST_CASE("no attacks means every action is fully acceptable") {
    const auto doc = load("library.json");
    auto p = doc.problem;
    p.utility_classes.clear();
    const auto r = decide(p);
    CHECK(r.graph.attacks.empty());
    CHECK(r.selected == std::vector<std::string>{"recommend", "ignore"});
    CHECK(r.default_pick() == "recommend");
    CHECK(explain(r).find("every action is fully acceptable") != std::string::npos);
}

TEST_CASE("explanations") {
    const auto text = explain(decide(library_with("data-protection").problem));
    CHECK(count(text, "1. You should have chosen") == 20);
    CHECK(text.find("Principle dataProtection (16 attacks):") != std::string::npos);
    CHECK(text.find("Principle utilitarian (4 attacks):") != std::string::npos);
    CHECK(text.find("Selected ignore with acceptability 0.300") != std::string::npos);
    CHECK(text.find("moral dilemma") != std::string::npos);

    const auto calm = explain(decide(library_with("pass-only").problem));
    CHECK(count(calm, "[") >= 4);
    CHECK(calm.find("no branch of it is attacked") != std::string::npos);
}

TEST_CASE("acceptability stays in the unit interval") {
    retro::testing::ProblemGenerator gen(23);
    for (int n = 0; n < 300; ++n) {
        const auto r = decide(gen.next());
        for (const auto& a : r.acceptability) {
            CHECK(a.acceptability >= 0.0);
            CHECK(a.acceptability <= 1.0);
        }
        CHECK_FALSE(r.selected.empty());
    }
}

TEST_CASE("permuting branch order keeps the selected set") {
    retro::testing::ProblemGenerator gen(31);
    for (int n = 0; n < 200; ++n) {
        const auto p = gen.next();
        auto shuffled = p;
        std::shuffle(shuffled.branches.begin(), shuffled.branches.end(), gen.rng());
        for (auto& action : shuffled.actions) std::shuffle(action.branches.begin(), action.branches.end(), gen.rng());
        const auto a = decide(p);
        const auto b = decide(shuffled);
        CHECK(a.selected == b.selected);
        CHECK(edge_set(a.graph) == edge_set(b.graph));
    }
}

TEST_CASE("adding a forbidden state never removes an attack") {
    retro::testing::ProblemGenerator gen(43);
    for (int n = 0; n < 200; ++n) {
        const auto p = gen.next();
        auto more = p;
        more.forbidden.push_back({p.variables[0].id, gen.coin(), "extra"});
        const auto before = edge_set(decide(p).graph);
        const auto after = edge_set(decide(more).graph);
        CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    }
}

}  // TEST_SUITE
