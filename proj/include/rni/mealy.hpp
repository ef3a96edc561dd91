#pragma once

#include "rni/action.hpp"
#include "rni/observable.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rni {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

// Finite input alphabet in canonical order; ids are positions in that order.
class Alphabet
{
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Action> actions);

    [[nodiscard]] std::optional<ActionId> find(const Action& a) const;
    [[nodiscard]] ActionId id(const Action& a) const;
    [[nodiscard]] const Action& at(ActionId id) const { return actions_.at(id); }
    [[nodiscard]] std::size_t size() const { return actions_.size(); }
    [[nodiscard]] const std::vector<Action>& actions() const { return actions_; }

    bool operator==(const Alphabet& other) const { return actions_ == other.actions_; }

private:
    std::vector<Action> actions_;
    std::map<std::string, ActionId> index_;
};

struct Transition
{
    StateId target = 0;
    OutputWord output;
};

// Deterministic, possibly partial Mealy machine. Immutable once built by the
// learner or a parser; safe to share read-only between workers.
class MealyMachine
{
public:
    MealyMachine() = default;
    explicit MealyMachine(Alphabet alphabet, std::size_t states = 1, StateId initial = 0);

    StateId add_state();
    void set_transition(StateId from, ActionId input, StateId to, OutputWord output);

    [[nodiscard]] const Transition* transition(StateId from, ActionId input) const;
    [[nodiscard]] std::vector<ActionId> defined_inputs(StateId s) const;
    [[nodiscard]] std::size_t num_states() const { return table_.size(); }
    [[nodiscard]] std::size_t num_transitions() const;
    [[nodiscard]] StateId initial() const { return initial_; }
    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }

    // Renumbers states in breadth-first order (canonical inputs) from the
    // initial state and drops unreachable ones.
    [[nodiscard]] MealyMachine canonical() const;

    // Checks reachability and that terminal observables lead to sinks.
    // Returns a description of the first violation, if any.
    [[nodiscard]] std::optional<std::string> check_invariants() const;

    bool operator==(const MealyMachine& other) const;

private:
    Alphabet alphabet_;
    StateId initial_ = 0;
    std::vector<std::vector<std::optional<Transition>>> table_;
};

struct RunResult
{
    std::vector<OutputWord> outputs;
    // Index of the first input with no transition, if the word left the machine.
    std::optional<std::size_t> undefined_at;
};

RunResult run(const MealyMachine& m, std::span<const ActionId> word);
RunResult run(const MealyMachine& m, std::span<const Action> word);

struct Distinction
{
    std::vector<Action> word;
    std::size_t step = 0; // index of the first differing step in `word`
};

// Weak trace equivalence modulo silent observables over the synchronous
// product. Returns nullopt when equivalent, otherwise a shortest distinguishing
// word (ties broken lexicographically in canonical action order).
// Throws AlphabetMismatch when the input alphabets differ.
std::optional<Distinction> weak_equiv(const MealyMachine& m0, const MealyMachine& m1, const SilentSet& silent);

// Line-oriented text format and DOT rendering.
void write_machine(std::ostream& os, const MealyMachine& m);
MealyMachine read_machine(std::istream& is);
std::string to_text(const MealyMachine& m);
MealyMachine from_text(const std::string& text);
std::string to_dot(const MealyMachine& m, const std::string& name = "mealy");

} // namespace rni
