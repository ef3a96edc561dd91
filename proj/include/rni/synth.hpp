#pragma once

#include "rni/checker.hpp"
#include "rni/sul.hpp"

#include <functional>
#include <memory>
#include <set>
#include <span>

namespace rni {

struct ProgramLine
{
    Owner owner;
    Action action;
};

// Attack program in listing form: "att: jin enc_s;", "enc: cmp s, #0", ...
// Enclave lines keep the secret placeholder `s`.
struct AttackProgram
{
    std::vector<ProgramLine> lines;

    [[nodiscard]] std::vector<Action> actions() const;
};

AttackProgram synthesize(const WitnessGraph& witness);
AttackProgram program_of(std::span<const Action> word);

std::string render(const AttackProgram& p);
// Inverse of render(); blank lines and lines starting with '#' are skipped.
// Throws SyntaxError on malformed lines or owner prefixes that do not match.
AttackProgram parse_program(std::string_view text);

struct Transcript
{
    std::vector<StepResult> steps;
    std::optional<std::size_t> rejected_at; // line the system refused to execute
};

struct ReplayResult
{
    std::map<std::int64_t, Transcript> transcripts;
    bool distinguishing = false;
};

using SecretSulFactory = std::function<std::unique_ptr<Sul>(std::int64_t secret)>;

// Runs the program once per secret (in parallel) and compares the projected
// transcripts.
ReplayResult replay(const AttackProgram& p, const SecretSulFactory& make, const std::set<std::int64_t>& secrets,
                    const SilentSet& silent);

std::string render(const ReplayResult& r, const AttackProgram& p, const SilentSet& silent);

} // namespace rni
