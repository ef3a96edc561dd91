#pragma once

#include "rni/action.hpp"
#include "rni/observable.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rni {

enum class ModeEvent {
    None,
    EnteredEnclave,
    ExitedEnclave,
    InterruptPending, // an interrupt awaits delivery (next input is IRQ)
    InterruptHandled,
    Returned,         // reti from the isr; next input is rem
    ResetOccurred,
    Diverged,
};

std::string_view to_string(ModeEvent e);
ModeEvent parse_mode_event(std::string_view s);

struct StepResult
{
    OutputWord output;
    ModeEvent event = ModeEvent::None;

    bool operator==(const StepResult&) const = default;
};

// Behavioral contract of a system under learning. Implementations must be
// deterministic: identical action sequences from reset yield identical results.
class Sul
{
public:
    virtual ~Sul() = default;
    virtual void reset() = 0;
    virtual StepResult step(const Action& a) = 0;
    // Number of steps actually executed (resets are not counted).
    [[nodiscard]] virtual std::uint64_t executed_steps() const = 0;
};

struct VersionFlags
{
    bool reti_extra_cycle = false;             // first instruction after reti takes one more cycle
    bool umem_write_leaks_mid_enclave = false; // enclave writes to unprotected memory are visible at once
    bool rw_violation_resets = false;          // enclave access to unprotected memory resets the CPU
    bool enclave_rst_resets = false;           // rst inside the enclave resets the CPU
    bool nemesis_padding = true;               // interrupt latency padding

    bool operator==(const VersionFlags&) const = default;
};

// Calibrated toy model of an interruptible enclave processor.
class ToySimulator final : public Sul
{
public:
    struct Config
    {
        std::int64_t secret = 0;
        VersionFlags flags;
        std::vector<std::string> protected_symbols{"enc_s", "enc_e", "data_s", "data_e", "TMP"};
        std::int64_t diverge_budget = 10000; // cycles
    };

    explicit ToySimulator(Config cfg);

    void reset() override;
    StepResult step(const Action& a) override;
    [[nodiscard]] std::uint64_t executed_steps() const override { return steps_; }

    [[nodiscard]] std::int64_t cycle() const { return st_.cycle; }

private:
    enum class Mode { UM, PM };
    enum class Phase { Prepare, Enclave, AwaitIrq, Isr, AwaitResume, Cleanup, Terminal };

    struct Op
    {
        Instruction instr;
        std::int64_t cost = 1;
        bool exits = false; // ends the enclave with JmpOut
    };

    struct Service
    {
        std::int64_t t_a = 0;
        std::int64_t t_e = 0;
        bool in_padding = false;
        bool extra_cycle = false; // serviced right after the delayed first resumed instruction
    };

    struct State
    {
        std::int64_t cycle = 0;
        Mode mode = Mode::UM;
        Phase phase = Phase::Prepare;
        bool created = false;
        std::optional<std::int64_t> timer_start; // cycle of the last TimerA reset
        std::int64_t timer_bound = 1;
        std::optional<std::int64_t> armed_k;    // interrupt requested by timer_enable
        std::optional<std::int64_t> irq_at;     // absolute arrival cycle
        std::optional<Service> service;         // interrupt waiting for IRQ
        std::vector<Op> residual;               // rest of the interrupted action
        std::int64_t resume_pad = 0;
        bool extra_cycle_due = false;
        bool rst_in_action = false;
        int interrupts = 0; // handled during the current enclave run
        bool zero = false;
        std::map<std::string, std::int64_t> memory;
        std::map<std::string, std::int64_t> buffered; // enclave writes not yet visible
        std::map<int, std::int64_t> regs;
    };

    StepResult attacker_step(const Action& a);
    StepResult enclave_step(const Action& a);
    StepResult irq_step();
    StepResult resume_step();
    StepResult run_ops(std::vector<Op> ops, std::int64_t pad, std::int64_t start);
    StepResult reset_out();
    StepResult exit_out(std::int64_t start);

    std::vector<Op> expand(const Action& a) const;
    std::int64_t cost(const Instruction& i) const;
    bool is_protected(const std::string& sym) const;
    bool touches_unprotected(const Instruction& i) const;
    std::int64_t read(const Operand& o) const;
    void write(const Operand& o, std::int64_t v);
    std::optional<std::int64_t> timer_value(std::int64_t at) const;
    void add_um_state(OutputWord& out) const;

    Config cfg_;
    State st_;
    std::uint64_t steps_ = 0;
};

// Drives an external simulator over stdin/stdout. Protocol, one line each:
//   -> RESET            <- OK
//   -> STEP <action>    <- OBS <observables|tau> EVT <event>
class ProcessSul final : public Sul
{
public:
    // `argv` is executed directly (no shell).
    explicit ProcessSul(std::vector<std::string> argv);
    ~ProcessSul() override;

    ProcessSul(const ProcessSul&) = delete;
    ProcessSul& operator=(const ProcessSul&) = delete;

    void reset() override;
    StepResult step(const Action& a) override;
    [[nodiscard]] std::uint64_t executed_steps() const override { return steps_; }

private:
    std::string request(const std::string& line);

    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::string buffer_;
    std::uint64_t steps_ = 0;
};

// Parses a reply line "OBS ... EVT ..." of the process protocol.
StepResult parse_step_reply(std::string_view line);
std::string format_step_reply(const StepResult& r);

// Serves `sul` over the line protocol until end of input. Used by sulsim.
void serve(Sul& sul, std::istream& in, std::ostream& out);

} // namespace rni
