#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rni {

enum class ObsKind { JmpIn, JmpOut, Time, TimerA, Diverge, Handle, Reti, Reset, GIE, UMem, Reg, Mode };

inline constexpr int kModeUM = 0;
inline constexpr int kModePM = 1;

// Abstract observable emitted by the system under attack. `in_enclave` marks
// values sampled while the CPU was in protected mode; the attacker cannot
// read its timer there, so silent sets may target them separately.
struct Observable
{
    ObsKind kind = ObsKind::Time;
    std::int64_t value = 0;
    bool in_enclave = false;

    static Observable jmp_in() { return {ObsKind::JmpIn}; }
    static Observable jmp_out(std::int64_t k) { return {ObsKind::JmpOut, k}; }
    static Observable time(std::int64_t k) { return {ObsKind::Time, k}; }
    static Observable timer_a(std::int64_t k, bool pm = false) { return {ObsKind::TimerA, k, pm}; }
    static Observable diverge() { return {ObsKind::Diverge}; }
    static Observable handle(std::int64_t k) { return {ObsKind::Handle, k}; }
    static Observable reti() { return {ObsKind::Reti}; }
    static Observable reset() { return {ObsKind::Reset}; }
    static Observable gie(bool on) { return {ObsKind::GIE, on ? 1 : 0}; }
    static Observable umem(std::int64_t v) { return {ObsKind::UMem, v}; }
    static Observable reg(std::int64_t v) { return {ObsKind::Reg, v}; }
    static Observable mode(int m) { return {ObsKind::Mode, m}; }

    [[nodiscard]] bool has_payload() const;
    [[nodiscard]] bool is_terminal() const { return kind == ObsKind::Reset || kind == ObsKind::Diverge; }

    // Human form used in reports and witness graphs: "TimerA 2", "JmpIn", "PM".
    [[nodiscard]] std::string display() const;
    // Lossless form used in model and cache files: "TimerA@PM 2".
    [[nodiscard]] std::string serialize() const;

    auto operator<=>(const Observable&) const = default;
};

using OutputWord = std::vector<Observable>;

std::string_view kind_name(ObsKind kind);
std::optional<ObsKind> parse_kind(std::string_view name);

Observable parse_observable(std::string_view text);

// "Time 10, TimerA 0"; the empty word renders as "tau" when `tau` is set.
std::string display(const OutputWord& word, bool tau = true);
std::string serialize(const OutputWord& word);
OutputWord parse_output_word(std::string_view text);

// Observables treated as invisible to the attacker. Entries select a kind,
// optionally restricted to protected-mode samples ("TimerA@PM") or to one
// payload value ("Time 5").
class SilentSet
{
public:
    struct Entry
    {
        ObsKind kind;
        bool enclave_only = false;
        std::optional<std::int64_t> value;

        auto operator<=>(const Entry&) const = default;
    };

    SilentSet() = default;
    explicit SilentSet(std::vector<Entry> entries);

    static SilentSet parse(const std::vector<std::string>& entries);
    static SilentSet of(std::initializer_list<ObsKind> kinds);

    void add(Entry e);
    [[nodiscard]] bool contains(const Observable& o) const;
    [[nodiscard]] bool silences_kind(ObsKind k) const;
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }

    // True when every observable silenced by this set is silenced by `other`.
    [[nodiscard]] bool subset_of(const SilentSet& other) const;

    [[nodiscard]] std::vector<std::string> to_strings() const;

private:
    std::vector<Entry> entries_;
};

OutputWord project(const OutputWord& word, const SilentSet& silent);
std::vector<OutputWord> project(const std::vector<OutputWord>& outputs, const SilentSet& silent);

} // namespace rni
