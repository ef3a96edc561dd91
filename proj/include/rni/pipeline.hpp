#pragma once

#include "rni/checker.hpp"
#include "rni/pac.hpp"
#include "rni/synth.hpp"

#include <filesystem>
#include <functional>

namespace rni {

enum class Role { Basic, Advanced };

std::string_view role_name(Role r);

struct AttackerConfig
{
    std::filesystem::path spec;
    SilentSet silent;
    ObserveFilter observe;
};

// One analysis scenario. Relative paths are resolved against the manifest's
// directory when loading.
struct Manifest
{
    std::string name;
    std::filesystem::path trusted;
    AttackerConfig basic;
    AttackerConfig advanced;
    std::map<std::string, std::int64_t> params;
    std::set<std::int64_t> secrets;
    VersionFlags flags;
    PacConfig pac;
    int parallelism = 0; // concurrent learning tasks; 0: one per task
    std::filesystem::path output;
    // External simulator command; empty means the built-in toy simulator.
    std::vector<std::string> sul_command;
    std::size_t max_refinements = 50;

    [[nodiscard]] const AttackerConfig& attacker(Role r) const { return r == Role::Basic ? basic : advanced; }
};

// Throws FormatError on malformed input and ManifestError on inconsistent
// contents (missing files, empty secret domain).
Manifest parse_manifest(const std::string& text, const std::filesystem::path& dir);
Manifest load_manifest(const std::filesystem::path& path);

// Simulator for one secret as configured by the manifest.
std::unique_ptr<Sul> make_sul(const Manifest& m, std::int64_t secret);

struct TaskReport
{
    Role role = Role::Basic;
    std::int64_t secret = 0;
    LearnStats stats;
    std::uint64_t pac_samples = 0;
    std::uint64_t pac_steps = 0;
    std::size_t refinements = 0;
    double seconds = 0;
};

// Learner plus oracle for one (attacker, secret) pair. Kept alive so a
// spurious witness can be fed back as a counterexample.
class LearningTask
{
public:
    LearningTask(const Manifest& m, Role role, std::int64_t secret);
    ~LearningTask();

    LearningTask(const LearningTask&) = delete;
    LearningTask& operator=(const LearningTask&) = delete;

    const MealyMachine& learn();
    // Feeds `word` back when the model disagrees with the system on it and
    // relearns. Returns false if the model was right.
    bool refine(std::span<const Action> word);

    [[nodiscard]] const MealyMachine& model() const { return model_; }
    [[nodiscard]] TaskReport report() const;
    [[nodiscard]] const QueryCache& cache() const { return cache_; }

private:
    struct Impl;
    QueryCache cache_;
    std::unique_ptr<Impl> impl_;
    MealyMachine model_;
    TaskReport report_;
};

struct Analysis
{
    ModelSet basic;
    ModelSet advanced;
    Verdict verdict;
    std::vector<TaskReport> tasks;
};

using Progress = std::function<void(const std::string&)>;

// Learns every (attacker, secret) model in parallel, checks PRNI and
// refines models until every witness is confirmed on the systems.
Analysis analyze(const Manifest& m, const Progress& progress = {});

// Learning only, in parallel; models in task order (basic first).
Analysis learn_all(const Manifest& m, const Progress& progress = {});

// Replays the witness words on the systems; true when both branches are
// reproduced.
bool confirmed(const Manifest& m, const WitnessGraph& w, Role role);

// Files under m.output: models/<role>_s<secret>.mealy, cache/<role>_s<secret>.log,
// report.txt, witnesses/w<k>.dot|.json, programs/w<k>.atk.
void write_models(const Manifest& m, const Analysis& a);
ModelSet read_models(const Manifest& m, Role role);
std::string report(const Manifest& m, const Analysis& a);
void write_report(const Manifest& m, const Analysis& a);

} // namespace rni
