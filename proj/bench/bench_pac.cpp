// Serial against OpenMP-parallel PAC rounds, and whole learning runs.
#include "rni/pipeline.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace rni;

namespace {

std::string slurp(const std::string& name)
{
    std::ifstream in(std::string(RNI_SOURCE_DIR) + "/specs/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Fixture
{
    AttackerSpec attacker;
    TrustedSpec trusted;
    MealyMachine model;

    Fixture()
    {
        ParseOptions opts;
        opts.params["n"] = 4;
        attacker = parse_attacker(slurp("advanced_attacker.spec"), opts);
        trusted = parse_trusted(slurp("enclave_add_nop.spec"), opts);
        ToySimulator sim({1, {}});
        QueryCache cache;
        SpecDrivenSul target(sim, cache, 1, attacker, trusted);
        PacOracle pac(spec_targets(toy(), 1, attacker, trusted), cache, {0.05, 0.05, 0.9, 1}, 1);
        model = Learner(target, input_alphabet(attacker, trusted)).run(pac).model;
    }

    static SulFactory toy()
    {
        return [] { return std::make_unique<ToySimulator>(ToySimulator::Config{1, {}}); };
    }
};

const Fixture& fixture()
{
    static const Fixture f;
    return f;
}

// One oracle round of `samples` traces on a cold cache against a correct
// model, so every sample is replayed in full.
void BM_PacRound(benchmark::State& state)
{
    const auto& f = fixture();
    PacConfig cfg{0.01, 0.01, 0.9, 7, static_cast<int>(state.range(0))};
    std::uint64_t steps = 0;
    for (auto _ : state) {
        QueryCache cache;
        PacOracle pac(spec_targets(Fixture::toy(), 1, f.attacker, f.trusted), cache, cfg, 1);
        pac.begin();
        benchmark::DoNotOptimize(pac.find_counterexample(f.model));
        steps += pac.system_steps();
    }
    state.counters["sim_steps"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_PacRound)->Arg(1)->Arg(2)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

// A full PRNI analysis of one scenario with the given number of concurrent
// learning tasks.
void BM_Analyze(benchmark::State& state)
{
    auto m = load_manifest(std::string(RNI_SOURCE_DIR) + "/specs/manifests/vb6.json");
    m.output.clear();
    m.parallelism = static_cast<int>(state.range(0));
    m.pac.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze(m).verdict.witnesses.size());
}
BENCHMARK(BM_Analyze)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
