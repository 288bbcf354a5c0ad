#pragma once

#include <electguard/gen.hpp>
#include <electguard/heuristics.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace electguard {

/// Bumped whenever a column is added, removed, renamed or reinterpreted.
inline constexpr int csv_schema_version = 1;

struct ExperimentConfig
{
    /// Profile shape and model; its seed field is ignored.
    GenConfig profile;
    std::vector<std::string> rules{"plurality", "veto", "borda"};
    int profiles = 1000;
    int kd_min = 2;
    int kd_max = 10;
    std::uint64_t seed = 1;
    int greedy2_trials = 100;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Adds wall-clock columns, which makes the CSV differ between runs.
    bool timing = false;

    void validate() const;
};

struct ExperimentRow
{
    std::string model;
    std::string rule;
    int k_d = 0;
    int k_a = 0;
    int profile = 0;
    std::uint64_t seed = 0;
    GreedyCategory category = GreedyCategory::defends;
    /// Only for category 3.
    std::optional<double> greedy2_fraction;
    double greedy1_ms = 0.0;
    double greedy2_ms = 0.0;
};

/// "uniform" or "two-top:<a>,<b>" with candidate names.
std::string model_label(const GenConfig & config);

/// One row per (profile, rule, k_d) with k_a = g - k_d, ordered by profile,
/// then rule, then k_d. Profile p uses seed derive_seed(seed, p).
std::vector<ExperimentRow> run_experiment(const ExperimentConfig & config);

void write_rows_csv(std::ostream & out, const std::vector<ExperimentRow> & rows, bool timing);
/// Per (rule, k_d): category counts, optimal fraction and mean greedy-2 fraction.
void write_summary_csv(std::ostream & out, const std::vector<ExperimentRow> & rows);

} // namespace electguard
