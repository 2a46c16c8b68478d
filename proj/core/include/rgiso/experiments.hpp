#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgiso/random.hpp"
#include "rgiso/search.hpp"
#include "rgiso/theory.hpp"

namespace rgiso {

/// Default per-trial budgets. Large enough that desk-scale experiments
/// complete, small enough that a pathological instance cannot hang a run.
SearchBudget default_lcs_budget();
SearchBudget default_sis_budget();

enum class LcsClassification { in_window, below_by_1, above_by_1, farther, unknown };

const char* to_string(LcsClassification c);
const char* to_string(Ternary t);

/// One L_N sample. Trial t draws its two graphs from sub-streams
/// (master, 2t) and (master, 2t+1), so trials are schedulable in any order
/// with identical results. L is the optimum when optimal is true, otherwise
/// the best lower bound found before the budget ran out. The witness mapping
/// is kept when at most 64 vertices map; larger witnesses are verified and
/// discarded.
struct LcsTrialRecord {
    int trial_index = 0;
    Seed g1_seed;
    Seed g2_seed;
    int L = 0;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    double elapsed_millis = 0;
    LcsClassification classification = LcsClassification::unknown;
    std::vector<std::pair<int, int>> witness;
};

struct LcsExperimentConfig {
    long long N = 2;
    int trials = 1;
    std::uint64_t master_seed = 0;
    SearchBudget budget = default_lcs_budget();
    int workers = 1;
};

struct LcsExperimentResult {
    LcsExperimentConfig config;
    ThresholdPrediction prediction;
    std::vector<LcsTrialRecord> trials;
    int optimal_count = 0;
    int unknown_count = 0;
    int in_window = 0;
    int below_by_1 = 0;
    int above_by_1 = 0;
    int farther = 0;
    int min_L = 0;
    int max_L = 0;
};

LcsExperimentResult run_lcs_trials(const LcsExperimentConfig& config);

struct SisTrialRecord {
    int trial_index = 0;
    Seed pattern_seed;
    Seed target_seed;
    Ternary outcome = Ternary::unknown;
    std::uint64_t nodes_explored = 0;
    double elapsed_millis = 0;
};

enum class SisPredictedSide { contain, exclude, window };

const char* to_string(SisPredictedSide s);

struct SisExperimentConfig {
    int n = 1;
    long long N = 2;
    int trials = 1;
    std::uint64_t master_seed = 0;
    SearchBudget budget = default_sis_budget();
    int workers = 1;
};

/// Aggregate empirical containment probability. p_hat excludes unknowns
/// (successes / (trials - unknowns)); an experiment with more than 10%
/// unknowns is marked inconclusive rather than silently biased. The
/// confidence interval is a two-sided 95% Wilson score interval.
struct SisExperimentSummary {
    int n = 0;
    long long N = 0;
    int trials = 0;
    int successes = 0;
    int failures = 0;
    int unknowns = 0;
    std::optional<double> p_hat;
    double ci_low = 0;
    double ci_high = 0;
    SisPredictedSide predicted = SisPredictedSide::window;
    bool inconclusive = false;
};

struct SisExperimentResult {
    SisExperimentConfig config;
    SisPrediction prediction;
    std::vector<SisTrialRecord> trials;
    SisExperimentSummary summary;
};

SisExperimentResult run_sis_trials(const SisExperimentConfig& config);

struct SweepConfig {
    long long N = 2;
    int n_from = 1;
    int n_to = 1;
    int trials_per_n = 1;
    std::uint64_t master_seed = 0;
    SearchBudget budget = default_sis_budget();
    int workers = 1;
};

/// One summary per n, plus the empirical transition location: the largest n
/// whose p_hat is at least 1/2 (absent when no n qualifies).
struct SweepResult {
    SweepConfig config;
    SisPrediction prediction;
    std::vector<SisExperimentResult> per_n;
    std::optional<int> empirical_transition;
};

SweepResult sweep_sis_window(const SweepConfig& config);

/// Two-sided Wilson score interval at confidence z (default 95%).
std::pair<double, double> wilson_interval(int successes, int n,
                                          double z = 1.959963984540054);

/// Machine-readable serializations. Deterministic: identical configs and
/// master seed produce byte-identical output regardless of worker count.
/// Measured wall times are emitted only when include_timings is set, since
/// they vary run to run; the default writes 0 in the millis fields.
std::string to_csv(const LcsExperimentResult& r, bool include_timings = false);
std::string to_csv(const SisExperimentResult& r, bool include_timings = false);
std::string to_csv(const SweepResult& r);
std::string to_json(const LcsExperimentResult& r, bool include_timings = false);
std::string to_json(const SisExperimentResult& r, bool include_timings = false);
std::string to_json(const SweepResult& r, bool include_timings = false);

/// Human-readable report with real timings.
std::string to_text(const LcsExperimentResult& r);
std::string to_text(const SisExperimentResult& r);
std::string to_text(const SweepResult& r);

} // namespace rgiso
