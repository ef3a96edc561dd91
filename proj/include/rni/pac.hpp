#pragma once

#include "rni/learner.hpp"

#include <functional>
#include <memory>
#include <random>

namespace rni {

struct PacConfig
{
    double epsilon = 0.01;
    double delta = 0.01;
    double continue_prob = 0.9;
    std::uint64_t seed = 1;
    int threads = 1; // 0: use every OpenMP thread
    std::size_t max_length = 1000;
};

// Throws std::invalid_argument when a bound lies outside (0,1).
void validate(const PacConfig& cfg);

// ceil((1/epsilon) * (ln(1/delta) + round * ln 2))
std::uint64_t sample_count(double epsilon, double delta, std::uint64_t round);

struct SampledTrace
{
    std::vector<Action> word;
    std::vector<OutputWord> outputs;
    std::vector<std::vector<Action>> admissible; // before each step, and after the last
    std::vector<Action> attack;                  // attacker-owned part of the word
    std::vector<Action> trusted;                 // enclave-owned part of the word
};

// Random generator of sample `index` in oracle round `round`; independent of
// how samples are spread over workers.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t round, std::uint64_t index);

// Extends the word step by step: with probability `continue_prob` pick one of
// the admissible inputs uniformly and execute it, otherwise stop.
SampledTrace sample_trace(QueryTarget& target, std::mt19937_64& rng, double continue_prob,
                          std::size_t max_length = 1000);

// Shortest prefix of the trace on which `hyp` disagrees (outputs or admissible
// inputs), or nullopt.
std::optional<std::vector<Action>> disagreement(const MealyMachine& hyp, const SampledTrace& trace);

using SulFactory = std::function<std::unique_ptr<Sul>()>;
// Builds a query target whose cache is the given one.
using TargetFactory = std::function<std::unique_ptr<QueryTarget>(QueryCache&)>;

// Spec-driven targets over fresh SULs from `make_sul`.
TargetFactory spec_targets(SulFactory make_sul, std::int64_t secret, const AttackerSpec& attacker,
                           const TrustedSpec& trusted, ObserveFilter filter = {});

// Sampling equivalence oracle. Round r draws sample_count(epsilon, delta, r)
// traces and reports the disagreeing trace with the smallest index, so the
// answer does not depend on the number of threads.
class PacOracle final : public EquivalenceOracle
{
public:
    // `cache` is shared with the learner; parallel rounds work on copies and
    // merge them back afterwards.
    PacOracle(TargetFactory make_target, QueryCache& cache, PacConfig cfg, std::int64_t secret = 0);
    ~PacOracle() override;

    void begin() override { round_ = 0; }
    std::optional<std::vector<Action>> find_counterexample(const MealyMachine& hyp) override;

    [[nodiscard]] std::uint64_t round() const { return round_; }
    [[nodiscard]] std::uint64_t samples_drawn() const { return drawn_; }
    [[nodiscard]] std::uint64_t system_steps() const;
    // One JSON line per round: round, samples, counterexample index and word.
    void attach_log(const std::string& path);

private:
    struct Worker;
    std::optional<std::pair<std::uint64_t, std::vector<Action>>> serial(const MealyMachine& hyp, std::uint64_t n);
    std::optional<std::pair<std::uint64_t, std::vector<Action>>> parallel(const MealyMachine& hyp, std::uint64_t n,
                                                                          int threads);
    Worker& worker(std::size_t i);

    TargetFactory make_target_;
    QueryCache& cache_;
    std::int64_t secret_;
    std::unique_ptr<QueryTarget> serial_target_;
    PacConfig cfg_;
    std::uint64_t round_ = 0;
    std::uint64_t drawn_ = 0;
    std::vector<std::unique_ptr<Worker>> workers_;
    std::unique_ptr<std::ofstream> log_;
};

} // namespace rni
