#pragma once

#include "rni/mealy.hpp"
#include "rni/target.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace rni {

// Finds an input word on which `hyp` and the system disagree, if it can.
class EquivalenceOracle
{
public:
    virtual ~EquivalenceOracle() = default;
    // Called once at the start of every learn() run.
    virtual void begin() {}
    virtual std::optional<std::vector<Action>> find_counterexample(const MealyMachine& hyp) = 0;
};

// Exact oracle for known machines (tests and calibration).
class ExactOracle final : public EquivalenceOracle
{
public:
    explicit ExactOracle(const MealyMachine& truth) : truth_(truth) {}
    std::optional<std::vector<Action>> find_counterexample(const MealyMachine& hyp) override;

private:
    const MealyMachine& truth_;
};

struct LearnBudget
{
    std::size_t max_tree_nodes = 200000;
    std::size_t max_rounds = 1000; // equivalence queries
};

struct LearnStats
{
    std::uint64_t output_queries = 0; // queries that reached the target
    std::uint64_t tree_hits = 0;      // queries answered by the tree alone
    std::uint64_t target_steps = 0;
    std::uint64_t system_steps = 0;
    std::uint64_t rounds = 0;
    std::uint64_t counterexamples = 0;
    std::size_t tree_nodes = 0;
    std::size_t basis = 0;
    // (basis size, apart basis/frontier pairs) before each equivalence query
    std::vector<std::pair<std::size_t, std::size_t>> progress;
};

struct LearnResult
{
    MealyMachine model;
    LearnStats stats;
};

// Observation tree with apartness; states of the hypothesis are basis nodes.
// Apartness also compares the admissible inputs at nodes, so inputs that are
// only legal after some outputs are learned like any other behaviour.
class ObservationTree
{
public:
    using NodeId = std::uint32_t;
    static constexpr NodeId kRoot = 0;

    explicit ObservationTree(Alphabet alphabet);

    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] std::optional<NodeId> child(NodeId n, ActionId a) const;
    [[nodiscard]] std::optional<NodeId> find(std::span<const ActionId> word) const;
    [[nodiscard]] const OutputWord& output(NodeId n) const { return nodes_.at(n).out; }
    [[nodiscard]] const std::vector<ActionId>& admissible(NodeId n) const { return nodes_.at(n).adm; }
    [[nodiscard]] std::vector<ActionId> access(NodeId n) const;

    void set_root(std::vector<ActionId> adm);
    NodeId add(NodeId parent, ActionId a, OutputWord out, std::vector<ActionId> adm);

    // A suffix on which the two subtrees disagree (outputs or admissible
    // inputs at the end), or nullopt when they are not apart.
    [[nodiscard]] std::optional<std::vector<ActionId>> witness(NodeId x, NodeId y) const;
    [[nodiscard]] bool apart(NodeId x, NodeId y) const { return witness(x, y).has_value(); }

    // All root paths, for consistency checks.
    void for_each_edge(const std::function<void(NodeId parent, ActionId a, NodeId child)>& f) const;

private:
    struct Node
    {
        NodeId parent = 0;
        ActionId in = 0;
        OutputWord out;
        std::vector<ActionId> adm; // sorted
        std::map<ActionId, NodeId> children;
    };

    Alphabet alphabet_;
    std::vector<Node> nodes_;
};

class Learner
{
public:
    Learner(QueryTarget& target, Alphabet alphabet, LearnBudget budget = {});

    LearnResult run(EquivalenceOracle& oracle);

    // Current hypothesis over the basis; requires a closed tree.
    [[nodiscard]] MealyMachine hypothesis() const;
    // First tree word the hypothesis gets wrong, if any.
    [[nodiscard]] std::optional<std::vector<ActionId>> inconsistency(const MealyMachine& hyp) const;
    // Adds `cex` to the tree and refines it; throws NotACounterexample when the
    // system agrees with `hyp` on the whole word.
    void process_counterexample(const MealyMachine& hyp, std::span<const Action> cex);

    [[nodiscard]] const ObservationTree& tree() const { return tree_; }
    [[nodiscard]] const std::vector<ObservationTree::NodeId>& basis() const { return basis_; }
    [[nodiscard]] std::size_t apart_pairs() const;
    [[nodiscard]] const LearnStats& stats() const { return stats_; }

    // Extends the tree until every frontier node has exactly one compatible
    // basis node.
    void stabilize();

private:
    using NodeId = ObservationTree::NodeId;

    // Runs `word` as far as it stays admissible; returns the last node reached.
    NodeId query(std::span<const ActionId> word);
    std::vector<ActionId> admissible_ids();
    [[nodiscard]] std::vector<NodeId> frontier() const;
    [[nodiscard]] std::vector<NodeId> candidates(NodeId f) const;
    [[nodiscard]] bool in_basis(NodeId n) const;
    [[nodiscard]] StateId state_of(NodeId basis_node) const;
    void refine(const MealyMachine& hyp, std::vector<ActionId> sigma, int depth);
    void check_budget() const;

    QueryTarget& target_;
    ObservationTree tree_;
    LearnBudget budget_;
    LearnStats stats_;
    std::vector<NodeId> basis_;
    std::uint64_t start_system_steps_ = 0;
};

// Input alphabet of a spec pair, including the router's IRQ and rem actions.
Alphabet input_alphabet(const AttackerSpec& attacker, const TrustedSpec& trusted);

} // namespace rni
