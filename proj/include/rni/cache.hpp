#pragma once

#include "rni/action.hpp"
#include "rni/sul.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rni {

// Per-secret prefix trie of executed steps. Append-only: a record, once
// stored, is never changed. Records may be mirrored to a JSON-lines log so a
// later run can reuse them.
class QueryCache
{
public:
    using NodeId = std::uint32_t;
    static constexpr NodeId kRoot = 0;

    // `context` names the configuration (specs, flags); log lines from other
    // contexts are ignored on load.
    explicit QueryCache(std::string context = "");

    QueryCache(const QueryCache& other);
    QueryCache& operator=(const QueryCache& other);
    QueryCache(QueryCache&&) noexcept = default;
    QueryCache& operator=(QueryCache&&) noexcept = default;

    [[nodiscard]] const std::string& context() const { return context_; }

    [[nodiscard]] std::optional<NodeId> child(std::int64_t secret, NodeId node, const Action& a) const;
    [[nodiscard]] const StepResult& record(std::int64_t secret, NodeId node) const;
    // Adds a record below `parent`; `word` is the full path to the new node.
    NodeId add(std::int64_t secret, NodeId parent, const Action& a, const StepResult& r,
               std::span<const Action> word);

    // Serves the longest cached prefix of `word` into `out`; returns its length.
    std::size_t lookup(std::int64_t secret, std::span<const Action> word, std::vector<StepResult>& out) const;
    void insert(std::int64_t secret, std::span<const Action> word, std::span<const StepResult> results);

    // Copies every record of `other` that is missing here.
    void merge(const QueryCache& other);

    [[nodiscard]] std::size_t size() const;

    // Appends future records to `path` (created if missing).
    void attach_log(const std::string& path);
    // Loads records from `path`; returns how many lines were used.
    std::size_t load(const std::string& path);

private:
    struct Node
    {
        std::map<std::string, NodeId> children;
        StepResult record;
    };
    using Trie = std::vector<Node>;

    Trie& trie(std::int64_t secret);
    const Trie* find_trie(std::int64_t secret) const;
    void log(std::int64_t secret, std::span<const Action> word, const StepResult& r);

    std::string context_;
    std::map<std::int64_t, Trie> tries_;
    std::unique_ptr<std::ofstream> log_;
};

// Runs `word` from reset, serving the longest cached prefix from `cache` and
// executing the rest on `sul`. New steps are added to the cache.
// Errors raised by the SUL are reported as SulFailure.
std::vector<StepResult> execute(Sul& sul, QueryCache& cache, std::int64_t secret, std::span<const Action> word);

} // namespace rni
