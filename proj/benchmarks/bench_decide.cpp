#include <benchmark/benchmark.h>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace retro;

static void BM_LibraryDecide(benchmark::State& state) {
    const auto doc = retro::testing::library_with("data-protection");
    for (auto _ : state) benchmark::DoNotOptimize(decide(doc.problem));
}
BENCHMARK(BM_LibraryDecide);

static void BM_LibraryParseAndRun(benchmark::State& state) {
    const auto text = retro::testing::read_text(retro::testing::scenario_path("library.json"));
    for (auto _ : state) benchmark::DoNotOptimize(run_retrospection(parse_scenario(text).document));
}
BENCHMARK(BM_LibraryParseAndRun);

static void BM_RandomDecide(benchmark::State& state) {
    retro::testing::ProblemGenerator gen(1);
    std::vector<EthicalDecisionProblem> problems;
    for (int i = 0; i < 256; ++i) problems.push_back(gen.next());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(decide(problems[i++ % problems.size()]));
}
BENCHMARK(BM_RandomDecide);

// Chain of `n` binary choices per action: 2^n branches each.
static EthicalDecisionProblem wide_problem(int vars) {
    EthicalDecisionProblem p;
    for (int v = 0; v < vars; ++v) p.variables.push_back({"v" + std::to_string(v), ""});
    p.initial = StateAssignment::all_false(p.variables);
    p.utility_classes.push_back({});
    for (int v = 0; v < vars; ++v) p.utility_classes[0].assignments.push_back({p.variables[v].id, true, double(v % 3) - 1});
    p.forbidden.push_back({"v0", true, "law"});
    int next = 0;
    for (const char* name : {"left", "right"}) {
        Action action{name, name, {}};
        const int count = 1 << vars;
        for (int mask = 0; mask < count; ++mask) {
            Branch b{"b" + std::to_string(next++), {}};
            for (int v = 0; v < vars; ++v) {
                const double p_true = name[0] == 'l' ? 0.5 : 0.25;
                const bool on = (mask >> v) & 1;
                b.events.push_back({p.variables[v].id, on, Probability::exact(on ? p_true : 1 - p_true)});
            }
            action.branches.push_back(b.id);
            p.branches.push_back(std::move(b));
        }
        p.actions.push_back(std::move(action));
    }
    return p;
}

static void BM_WideDecide(benchmark::State& state) {
    const auto p = wide_problem(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(decide(p));
    state.counters["branches"] = static_cast<double>(p.branches.size());
}
BENCHMARK(BM_WideDecide)->DenseRange(2, 7);

BENCHMARK_MAIN();
