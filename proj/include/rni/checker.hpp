#pragma once

#include "rni/mealy.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rni {

using ModelSet = std::map<std::int64_t, MealyMachine>; // secret -> learned model

struct PairVerdict
{
    std::int64_t s0 = 0;
    std::int64_t s1 = 0;
    std::optional<Distinction> distinction; // nullopt: Equivalent

    [[nodiscard]] bool equivalent() const { return !distinction; }
};

// weak_equiv over every unordered pair of secrets, in ascending order.
std::vector<PairVerdict> check_rni(const ModelSet& models, const SilentSet& silent);

[[nodiscard]] bool all_equivalent(const std::vector<PairVerdict>& pairs);

struct WitnessStep
{
    Action action;
    OutputWord output; // already projected
};

// Shared prefix plus one branch per model. Each branch starts with the
// distinguishing step (absent when the model rejects that input) and is
// extended along forced silent steps so the difference becomes visible.
struct WitnessGraph
{
    std::int64_t s0 = 0;
    std::int64_t s1 = 0;
    std::vector<WitnessStep> shared;
    std::vector<WitnessStep> branch0;
    std::vector<WitnessStep> branch1;
    // product state and input that distinguish the models
    StateId state0 = 0;
    StateId state1 = 0;
    Action input;

    // shared prefix plus the distinguishing input
    [[nodiscard]] std::vector<Action> word() const;
};

// One shortest witness per distinguishing (product state, input) pair that is
// reachable without passing another difference. Ordered by length, then by
// canonical input order. Throws NotDistinguished when the models agree.
std::vector<WitnessGraph> build_witness_graphs(const MealyMachine& m0, const MealyMachine& m1,
                                               const SilentSet& silent, std::int64_t s0 = 0, std::int64_t s1 = 1);

// Replays both branches on their models; returns a description of the first
// mismatch, if any.
std::optional<std::string> validate_witness(const WitnessGraph& w, const MealyMachine& m0, const MealyMachine& m1,
                                            const SilentSet& silent);

enum class Preservation { Preserved, Violated };

struct Verdict
{
    std::vector<PairVerdict> basic;
    std::vector<PairVerdict> advanced;
    Preservation prni = Preservation::Preserved;
    bool insecure_baseline = false; // the basic attacker already distinguishes secrets
    std::vector<WitnessGraph> witnesses;
};

// Robust noninterference is preserved unless the basic attacker sees no
// difference while the advanced one does.
Verdict check_prni(const ModelSet& basic, const ModelSet& advanced, const SilentSet& silent);
// Same, with each attacker judged under its own silent set.
Verdict check_prni(const ModelSet& basic, const ModelSet& advanced, const SilentSet& basic_silent,
                   const SilentSet& advanced_silent);

std::string to_dot(const WitnessGraph& w, const std::string& name = "witness");
std::string to_json(const WitnessGraph& w);
WitnessGraph witness_from_json(const std::string& text);

} // namespace rni
