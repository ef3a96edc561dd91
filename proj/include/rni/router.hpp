#pragma once

#include "rni/spec.hpp"
#include "rni/sul.hpp"

namespace rni {

// Tracks which specification section governs the next input, switching on
// the mode events reported by the SUL. Copyable; a learner may keep one per
// observation-tree node.
class Router
{
public:
    enum class Phase { Prepare, Enclave, AwaitIrq, Isr, AwaitResume, Cleanup, Terminal };

    Router() = default;
    Router(AttackerSpec attacker, TrustedSpec trusted);

    void reset();
    [[nodiscard]] Phase phase() const { return phase_; }
    [[nodiscard]] std::vector<Action> admissible() const;
    [[nodiscard]] bool is_admissible(const Action& a) const;

    // Throws Inadmissible when `a` is not admissible and ProtocolViolation
    // when `e` cannot follow `a` in the current phase.
    // Leaves the router unchanged when it throws.
    void advance(const Action& a, ModeEvent e);

private:
    void advance_unchecked(const Action& a, ModeEvent e);
    void to_section(Section s);

    AttackerSpec attacker_;
    TrustedSpec trusted_;
    Phase phase_ = Phase::Prepare;
    SectionCursor current_;
    SectionCursor enclave_; // kept across interrupts
};

std::string_view to_string(Router::Phase p);

} // namespace rni
