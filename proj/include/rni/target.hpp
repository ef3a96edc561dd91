#pragma once

#include "rni/cache.hpp"
#include "rni/mealy.hpp"
#include "rni/router.hpp"

#include <optional>
#include <set>

namespace rni {

// What the learner talks to: a resettable, stepwise system that also reports
// which inputs are admissible next.
class QueryTarget
{
public:
    virtual ~QueryTarget() = default;
    virtual void reset() = 0;
    [[nodiscard]] virtual std::vector<Action> admissible() const = 0;
    // Throws Inadmissible when `a` is not admissible.
    virtual OutputWord step(const Action& a) = 0;
    // Steps that reached the underlying system (cache hits excluded).
    [[nodiscard]] virtual std::uint64_t system_steps() const = 0;
};

// Keeps only the observable kinds the attacker is configured to see.
// Terminal observables always pass.
class ObserveFilter
{
public:
    ObserveFilter() = default; // keep everything
    explicit ObserveFilter(std::set<ObsKind> kinds) : kinds_(std::move(kinds)) {}

    [[nodiscard]] OutputWord apply(const OutputWord& w) const;
    [[nodiscard]] bool keeps_all() const { return !kinds_; }
    [[nodiscard]] std::vector<std::string> to_strings() const;

private:
    std::optional<std::set<ObsKind>> kinds_;
};

// A SUL bound to a secret and driven within the specifications; steps are
// served from the cache where possible and replayed on the SUL otherwise.
class SpecDrivenSul final : public QueryTarget
{
public:
    SpecDrivenSul(Sul& sul, QueryCache& cache, std::int64_t secret, const AttackerSpec& attacker,
                  const TrustedSpec& trusted, ObserveFilter filter = {});

    void reset() override;
    [[nodiscard]] std::vector<Action> admissible() const override { return router_.admissible(); }
    OutputWord step(const Action& a) override;
    [[nodiscard]] std::uint64_t system_steps() const override { return sul_.executed_steps(); }

    // Raw step records (unfiltered) of the current word.
    [[nodiscard]] const std::vector<StepResult>& trace() const { return trace_; }

private:
    Sul& sul_;
    QueryCache& cache_;
    std::int64_t secret_;
    ObserveFilter filter_;
    Router router_;
    std::vector<Action> word_;
    std::vector<StepResult> trace_;
    QueryCache::NodeId node_ = QueryCache::kRoot;
    bool in_sync_ = false; // the SUL has executed exactly word_ since its last reset
};

// A known machine treated as a black box; admissible inputs are its defined ones.
class MealySul final : public QueryTarget
{
public:
    explicit MealySul(const MealyMachine& m) : m_(m), state_(m.initial()) {}

    void reset() override { state_ = m_.initial(); }
    [[nodiscard]] std::vector<Action> admissible() const override;
    OutputWord step(const Action& a) override;
    [[nodiscard]] std::uint64_t system_steps() const override { return steps_; }

private:
    const MealyMachine& m_;
    StateId state_;
    std::uint64_t steps_ = 0;
};

} // namespace rni
