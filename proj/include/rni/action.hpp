#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rni {

enum class Owner { Attacker, Enclave, System };

std::string_view to_string(Owner owner);

// Operand of an enclave instruction, kept symbolic: "r5", "#42", "#enc_e",
// "&unprot_mem", or the secret placeholder "s".
struct Operand
{
    enum class Kind { Register, Immediate, Absolute, Secret };

    Kind kind = Kind::Register;
    std::string name; // register number, immediate literal/symbol, or address symbol

    static Operand reg(int number) { return {Kind::Register, std::to_string(number)}; }
    static Operand imm(std::string v) { return {Kind::Immediate, std::move(v)}; }
    static Operand abs(std::string v) { return {Kind::Absolute, std::move(v)}; }
    static Operand secret() { return {Kind::Secret, "s"}; }

    [[nodiscard]] std::string to_string() const;
    auto operator<=>(const Operand&) const = default;
};

enum class Opcode { Nop, Mov, Add, Cmp, Jmp, Dint, Rst, Ubr };

struct Instruction
{
    Opcode op = Opcode::Nop;
    std::vector<Operand> args;

    [[nodiscard]] std::string to_string() const;
    auto operator<=>(const Instruction&) const = default;
};

// Number of operands each opcode takes.
std::size_t opcode_arity(Opcode op);

enum class ActionKind {
    // attacker capabilities
    StartCounting,
    CreateEnclave,
    Jin,
    TimerEnable,
    Reti,
    Jmp,
    // trusted component
    Instr,
    Ifz,
    // system-driven steps: interrupt delivery and resumption after reti
    Irq,
    Resume,
};

// One input symbol of the learned machines. Enclave actions are secret
// independent: the placeholder `s` is resolved by the simulator.
struct Action
{
    ActionKind kind = ActionKind::Reti;
    std::int64_t number = 0;          // start_counting n, timer_enable k
    std::vector<std::string> symbols; // create: 4 bounds; jin/jmp: target
    std::vector<Instruction> body;    // Instr: one instruction; Ifz: taken branch
    std::vector<Instruction> orelse;  // Ifz: other branch

    static Action start_counting(std::int64_t n);
    static Action create_enclave(std::string enc_s = "enc_s", std::string enc_e = "enc_e",
                                 std::string data_s = "data_s", std::string data_e = "data_e");
    static Action jin(std::string target = "enc_s");
    static Action timer_enable(std::int64_t k);
    static Action reti();
    static Action jmp(std::string target);
    static Action instr(Instruction i);
    static Action ifz(std::vector<Instruction> taken, std::vector<Instruction> other);
    static Action irq();
    static Action resume();

    [[nodiscard]] Owner owner() const;
    [[nodiscard]] bool is_system() const { return owner() == Owner::System; }

    // Canonical concrete syntax, e.g. "timer_enable 3", "ifz (rst; nop)(nop; rst)".
    [[nodiscard]] std::string to_string() const;

    // Throws std::invalid_argument when parameters do not match the kind.
    void validate() const;

    bool operator==(const Action& other) const = default;
};

// Canonical ordering: by kind, then numeric parameter, then concrete syntax.
std::strong_ordering canonical_compare(const Action& a, const Action& b);

struct CanonicalLess
{
    bool operator()(const Action& a, const Action& b) const { return canonical_compare(a, b) < 0; }
};

std::string render_instructions(const std::vector<Instruction>& seq);

// Parses one action in concrete syntax (the inverse of Action::to_string).
// Accepts the address aliases enclave_start/enclave_end for enc_s/enc_e.
// Throws SyntaxError or UnknownAction.
Action parse_action(std::string_view text);

} // namespace rni
