#pragma once

#include "rni/action.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace rni {

// Regular expressions over actions, hash-consed in a shared pool. Nodes are
// identified by RegexId; structurally equal nodes share an id. Derivatives
// normalize alternations (flattened, sorted, deduplicated) so that iterated
// derivatives of a regex reach finitely many ids.
using RegexId = std::uint32_t;

enum class RegexKind { Empty, Eps, Atom, Seq, Alt, Star };

struct RegexNode
{
    RegexKind kind = RegexKind::Empty;
    RegexId left = 0;  // Seq/Alt/Star operand
    RegexId right = 0; // Seq/Alt second operand
    std::uint32_t atom = 0; // index into the pool's atom table
    bool nullable = false;
};

class RegexPool
{
public:
    RegexPool();

    static constexpr RegexId kEmpty = 0;
    static constexpr RegexId kEps = 1;

    RegexId atom(const Action& a);
    RegexId seq(RegexId a, RegexId b);
    RegexId star(RegexId a);
    // Alternation preserving operand order, as written in a source file.
    RegexId alt(RegexId a, RegexId b);
    // Alternation normalized up to associativity, commutativity, idempotence.
    RegexId alt_normalized(RegexId a, RegexId b);

    [[nodiscard]] RegexNode node(RegexId id) const;
    [[nodiscard]] Action atom_action(std::uint32_t index) const;
    [[nodiscard]] bool nullable(RegexId id) const { return node(id).nullable; }
    [[nodiscard]] bool empty_language(RegexId id) const { return id == kEmpty; }
    [[nodiscard]] std::size_t size() const;

    RegexId derivative(RegexId r, const Action& a);
    // Actions with a non-empty derivative, in canonical order.
    std::vector<Action> first(RegexId r);
    bool matches(RegexId r, const std::vector<Action>& word);

    // Every atom occurring in r, in canonical order.
    std::vector<Action> atoms(RegexId r) const;

private:
    RegexId intern(RegexNode n);
    RegexId alt_raw(RegexId a, RegexId b);
    void collect_alts(RegexId r, std::vector<RegexId>& out) const;
    void collect_first(RegexId r, std::vector<std::uint32_t>& out) const;
    std::uint32_t atom_index(const Action& a);

    mutable std::recursive_mutex mu_;
    std::vector<RegexNode> nodes_;
    std::map<std::tuple<int, RegexId, RegexId, std::uint32_t>, RegexId> index_;
    std::vector<Action> atoms_;
    std::map<std::string, std::uint32_t> atom_index_;
    std::map<std::pair<RegexId, std::uint32_t>, RegexId> deriv_cache_;
};

enum class Section { Prepare, Enclave, Isr, Cleanup };

std::string_view to_string(Section s);

struct AttackerSpec
{
    std::shared_ptr<RegexPool> pool;
    RegexId isr = RegexPool::kEps;
    RegexId prepare = RegexPool::kEps;
    RegexId cleanup = RegexPool::kEps;

    [[nodiscard]] RegexId section(Section s) const;
    // All attacker actions mentioned in any section, canonical order.
    [[nodiscard]] std::vector<Action> alphabet() const;
};

struct TrustedSpec
{
    std::shared_ptr<RegexPool> pool;
    RegexId enclave = RegexPool::kEps;
    std::vector<std::int64_t> secret_domain;

    [[nodiscard]] std::vector<Action> alphabet() const;
};

using Spec = std::variant<AttackerSpec, TrustedSpec>;

struct ParseOptions
{
    // Values for symbolic family bounds such as `timer_enable n`.
    std::map<std::string, std::int64_t> params;
    // Addresses substituted for the create_enclave abbreviation.
    std::vector<std::string> enclave_layout{"enc_s", "enc_e", "data_s", "data_e"};
    std::vector<std::int64_t> secret_domain{0, 1};
    // Pool to intern into; a fresh one is created when null.
    std::shared_ptr<RegexPool> pool;
};

// Throws SyntaxError, UnknownAction, or OwnershipError.
Spec parse_spec(const std::string& text, const ParseOptions& opts = {});
AttackerSpec parse_attacker(const std::string& text, const ParseOptions& opts = {});
TrustedSpec parse_trusted(const std::string& text, const ParseOptions& opts = {});

// Pretty printer. Runs of three or more consecutive integer-parameter
// alternatives are written back as `a | ... | b`.
std::string print_regex(const RegexPool& pool, RegexId r);
std::string print_spec(const AttackerSpec& spec);
std::string print_spec(const TrustedSpec& spec);

// Position inside one section of a specification.
class SectionCursor
{
public:
    SectionCursor() = default;
    SectionCursor(std::shared_ptr<RegexPool> pool, Section section, RegexId derivative)
        : pool_(std::move(pool)), section_(section), derivative_(derivative)
    {
    }

    [[nodiscard]] Section section() const { return section_; }
    [[nodiscard]] RegexId derivative() const { return derivative_; }
    [[nodiscard]] std::vector<Action> admissible() const;
    [[nodiscard]] bool is_admissible(const Action& a) const;
    // The executed prefix is a complete word of the section.
    [[nodiscard]] bool accepting() const;
    // Nothing further can be accepted.
    [[nodiscard]] bool complete() const;

    // Throws Inadmissible.
    [[nodiscard]] SectionCursor advance(const Action& a) const;

    bool operator==(const SectionCursor& o) const
    {
        return pool_ == o.pool_ && section_ == o.section_ && derivative_ == o.derivative_;
    }

private:
    std::shared_ptr<RegexPool> pool_;
    Section section_ = Section::Prepare;
    RegexId derivative_ = RegexPool::kEmpty;
};

SectionCursor cursor(const AttackerSpec& spec, Section s);
SectionCursor cursor(const TrustedSpec& spec);

} // namespace rni
