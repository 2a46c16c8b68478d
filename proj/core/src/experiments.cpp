#include "rgiso/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "rgiso/graph.hpp"
#include "rgiso/mcis.hpp"
#include "rgiso/sis.hpp"

namespace rgiso {

namespace {

using ojson = nlohmann::ordered_json;

// Each worker pulls the next unclaimed trial index; trials write only their
// own slot, so results are identical for any worker count.
void run_pool(int trials, int workers, const std::function<void(int)>& body) {
    workers = std::max(1, std::min(workers, trials));
    if (workers == 1) {
        for (int t = 0; t < trials; ++t)
            body(t);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int t = next.fetch_add(1);
                if (t >= trials)
                    return;
                try {
                    body(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next.store(trials);
                    return;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

LcsClassification classify(int L, bool optimal, const ThresholdPrediction& p) {
    if (!optimal)
        return LcsClassification::unknown;
    if (L >= p.lo && L <= p.hi)
        return LcsClassification::in_window;
    if (L == p.lo - 1)
        return LcsClassification::below_by_1;
    if (L == p.hi + 1)
        return LcsClassification::above_by_1;
    return LcsClassification::farther;
}

SisPredictedSide predicted_side(int n, const SisPrediction& p) {
    if (n <= p.n_contain)
        return SisPredictedSide::contain;
    if (n >= p.n_exclude)
        return SisPredictedSide::exclude;
    return SisPredictedSide::window;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

long long emitted_millis(double millis, bool include_timings) {
    return include_timings ? static_cast<long long>(std::llround(millis)) : 0;
}

ojson budget_json(const SearchBudget& b) {
    ojson j;
    j["max_nodes"] = b.max_nodes ? ojson(*b.max_nodes) : ojson(nullptr);
    j["max_time_ms"] = b.max_time ? ojson(b.max_time->count()) : ojson(nullptr);
    return j;
}

ojson seed_json(const Seed& s) {
    ojson j;
    j["master"] = s.master;
    j["stream"] = s.stream;
    return j;
}

ojson lcs_prediction_json(const ThresholdPrediction& p) {
    ojson j;
    j["N"] = p.N;
    j["x"] = static_cast<double>(p.x);
    j["eps"] = static_cast<double>(p.eps);
    j["lo"] = p.lo;
    j["hi"] = p.hi;
    j["boundary_flag"] = p.boundary_flag;
    return j;
}

ojson sis_prediction_json(const SisPrediction& p) {
    ojson j;
    j["N"] = p.N;
    j["y"] = static_cast<double>(p.y);
    j["eps"] = static_cast<double>(p.eps);
    j["n_contain"] = p.n_contain;
    j["n_exclude"] = p.n_exclude;
    j["boundary_flag"] = p.boundary_flag;
    return j;
}

ojson sis_summary_json(const SisExperimentSummary& s) {
    ojson j;
    j["n"] = s.n;
    j["N"] = s.N;
    j["trials"] = s.trials;
    j["successes"] = s.successes;
    j["failures"] = s.failures;
    j["unknowns"] = s.unknowns;
    j["p_hat"] = s.p_hat ? ojson(*s.p_hat) : ojson(nullptr);
    j["ci_low"] = s.ci_low;
    j["ci_high"] = s.ci_high;
    j["predicted"] = to_string(s.predicted);
    j["inconclusive"] = s.inconclusive;
    return j;
}

} // namespace

SearchBudget default_lcs_budget() { return SearchBudget::node_limit(1000000000ull); }
SearchBudget default_sis_budget() { return SearchBudget::node_limit(100000000ull); }

const char* to_string(LcsClassification c) {
    switch (c) {
    case LcsClassification::in_window: return "in_window";
    case LcsClassification::below_by_1: return "below_by_1";
    case LcsClassification::above_by_1: return "above_by_1";
    case LcsClassification::farther: return "farther";
    case LcsClassification::unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Ternary t) {
    switch (t) {
    case Ternary::yes: return "yes";
    case Ternary::no: return "no";
    case Ternary::unknown: return "unknown";
    }
    return "?";
}

const char* to_string(SisPredictedSide s) {
    switch (s) {
    case SisPredictedSide::contain: return "predict_contain";
    case SisPredictedSide::exclude: return "predict_exclude";
    case SisPredictedSide::window: return "in_window";
    }
    return "?";
}

std::pair<double, double> wilson_interval(int successes, int n, double z) {
    if (n <= 0)
        return {0.0, 1.0};
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

LcsExperimentResult run_lcs_trials(const LcsExperimentConfig& config) {
    if (config.N < 2)
        throw std::invalid_argument("run_lcs_trials: N must be at least 2");
    if (config.trials < 1)
        throw std::invalid_argument("run_lcs_trials: trials must be at least 1");

    LcsExperimentResult result;
    result.config = config;
    result.prediction = lcs_threshold(config.N);
    result.trials.resize(static_cast<std::size_t>(config.trials));

    const auto& prediction = result.prediction;
    run_pool(config.trials, config.workers, [&](int t) {
        LcsTrialRecord rec;
        rec.trial_index = t;
        rec.g1_seed = {config.master_seed, 2 * static_cast<std::uint64_t>(t)};
        rec.g2_seed = {config.master_seed, 2 * static_cast<std::uint64_t>(t) + 1};
        const Graph g1 = gnp_sample(static_cast<int>(config.N), 0.5, rec.g1_seed);
        const Graph g2 = gnp_sample(static_cast<int>(config.N), 0.5, rec.g2_seed);
        const SolveResult solved = max_common_induced_subgraph(g1, g2, config.budget);
        rec.L = solved.size;
        rec.optimal = solved.optimal;
        rec.nodes_explored = solved.nodes_explored;
        rec.elapsed_millis = solved.elapsed.count();
        rec.classification = classify(rec.L, rec.optimal, prediction);
        // every reported L is backed by a verified witness; solver verified
        // it once already, re-check here before deciding whether to keep it
        if (!is_induced_isomorphism(g1, g2, solved.mapping))
            throw std::logic_error("run_lcs_trials: witness failed re-verification");
        if (solved.size <= 64)
            rec.witness = solved.mapping;
        result.trials[static_cast<std::size_t>(t)] = std::move(rec);
    });

    result.min_L = config.trials > 0 ? result.trials[0].L : 0;
    result.max_L = result.min_L;
    for (const auto& rec : result.trials) {
        result.min_L = std::min(result.min_L, rec.L);
        result.max_L = std::max(result.max_L, rec.L);
        if (rec.optimal)
            ++result.optimal_count;
        switch (rec.classification) {
        case LcsClassification::in_window: ++result.in_window; break;
        case LcsClassification::below_by_1: ++result.below_by_1; break;
        case LcsClassification::above_by_1: ++result.above_by_1; break;
        case LcsClassification::farther: ++result.farther; break;
        case LcsClassification::unknown: ++result.unknown_count; break;
        }
    }
    return result;
}

SisExperimentResult run_sis_trials(const SisExperimentConfig& config) {
    if (config.n < 1 || config.n > config.N)
        throw std::invalid_argument("run_sis_trials: need 1 <= n <= N");
    if (config.trials < 1)
        throw std::invalid_argument("run_sis_trials: trials must be at least 1");

    SisExperimentResult result;
    result.config = config;
    result.prediction = sis_threshold(config.N);
    result.trials.resize(static_cast<std::size_t>(config.trials));

    run_pool(config.trials, config.workers, [&](int t) {
        SisTrialRecord rec;
        rec.trial_index = t;
        rec.pattern_seed = {config.master_seed, 2 * static_cast<std::uint64_t>(t)};
        rec.target_seed = {config.master_seed, 2 * static_cast<std::uint64_t>(t) + 1};
        const Graph pattern = gnp_sample(config.n, 0.5, rec.pattern_seed);
        const Graph target = gnp_sample(static_cast<int>(config.N), 0.5, rec.target_seed);
        const SisResult solved = contains_induced(pattern, target, config.budget);
        rec.outcome = solved.found;
        rec.nodes_explored = solved.nodes_explored;
        rec.elapsed_millis = solved.elapsed.count();
        result.trials[static_cast<std::size_t>(t)] = rec;
    });

    auto& s = result.summary;
    s.n = config.n;
    s.N = config.N;
    s.trials = config.trials;
    for (const auto& rec : result.trials) {
        if (rec.outcome == Ternary::yes)
            ++s.successes;
        else if (rec.outcome == Ternary::no)
            ++s.failures;
        else
            ++s.unknowns;
    }
    const int decided = s.trials - s.unknowns;
    if (decided > 0) {
        s.p_hat = static_cast<double>(s.successes) / decided;
        std::tie(s.ci_low, s.ci_high) = wilson_interval(s.successes, decided);
    } else {
        s.ci_low = 0;
        s.ci_high = 1;
    }
    s.predicted = predicted_side(config.n, result.prediction);
    s.inconclusive = 10 * s.unknowns > s.trials;
    return result;
}

SweepResult sweep_sis_window(const SweepConfig& config) {
    if (config.n_from < 1 || config.n_from > config.n_to || config.n_to > config.N)
        throw std::invalid_argument("sweep_sis_window: need 1 <= n_from <= n_to <= N");

    SweepResult result;
    result.config = config;
    result.prediction = sis_threshold(config.N);
    for (int n = config.n_from; n <= config.n_to; ++n) {
        SisExperimentConfig c;
        c.n = n;
        c.N = config.N;
        c.trials = config.trials_per_n;
        c.master_seed = config.master_seed;
        c.budget = config.budget;
        c.workers = config.workers;
        result.per_n.push_back(run_sis_trials(c));
    }
    for (const auto& row : result.per_n)
        if (row.summary.p_hat && *row.summary.p_hat >= 0.5)
            result.empirical_transition = row.summary.n;
    return result;
}

std::string to_csv(const LcsExperimentResult& r, bool include_timings) {
    std::ostringstream out;
    out << "trial,seed_hi,seed_lo,outcome,value,nodes,millis,classification\n";
    for (const auto& rec : r.trials) {
        out << rec.trial_index << ',' << rec.g1_seed.master << ',' << rec.g1_seed.stream
            << ',' << (rec.optimal ? "optimal" : "budget") << ',' << rec.L << ','
            << rec.nodes_explored << ',' << emitted_millis(rec.elapsed_millis, include_timings)
            << ',' << to_string(rec.classification) << '\n';
    }
    return out.str();
}

std::string to_csv(const SisExperimentResult& r, bool include_timings) {
    std::ostringstream out;
    out << "trial,seed_hi,seed_lo,outcome,value,nodes,millis,classification\n";
    const char* side = to_string(r.summary.predicted);
    for (const auto& rec : r.trials) {
        out << rec.trial_index << ',' << rec.pattern_seed.master << ','
            << rec.pattern_seed.stream << ',';
        switch (rec.outcome) {
        case Ternary::yes: out << "found,1"; break;
        case Ternary::no: out << "absent,0"; break;
        case Ternary::unknown: out << "unknown,"; break;
        }
        out << ',' << rec.nodes_explored << ','
            << emitted_millis(rec.elapsed_millis, include_timings) << ',' << side << '\n';
    }
    return out.str();
}

std::string to_csv(const SweepResult& r) {
    std::ostringstream out;
    out << "n,N,trials,successes,failures,unknowns,p_hat,ci_low,ci_high,predicted\n";
    for (const auto& row : r.per_n) {
        const auto& s = row.summary;
        out << s.n << ',' << s.N << ',' << s.trials << ',' << s.successes << ','
            << s.failures << ',' << s.unknowns << ','
            << (s.p_hat ? format_double(*s.p_hat) : std::string{}) << ','
            << format_double(s.ci_low) << ',' << format_double(s.ci_high) << ','
            << to_string(s.predicted) << '\n';
    }
    return out.str();
}

std::string to_json(const LcsExperimentResult& r, bool include_timings) {
    ojson j;
    j["experiment"] = "lcs";
    j["config"] = {{"N", r.config.N},
                   {"trials", r.config.trials},
                   {"master_seed", r.config.master_seed},
                   {"budget", budget_json(r.config.budget)}};
    j["prediction"] = lcs_prediction_json(r.prediction);
    ojson trials = ojson::array();
    for (const auto& rec : r.trials) {
        ojson t;
        t["trial_index"] = rec.trial_index;
        t["g1_seed"] = seed_json(rec.g1_seed);
        t["g2_seed"] = seed_json(rec.g2_seed);
        t["L"] = rec.L;
        t["optimal"] = rec.optimal;
        t["nodes_explored"] = rec.nodes_explored;
        t["elapsed_millis"] = emitted_millis(rec.elapsed_millis, include_timings);
        t["classification"] = to_string(rec.classification);
        trials.push_back(std::move(t));
    }
    j["trials"] = std::move(trials);
    j["aggregate"] = {{"trials", r.config.trials},
                      {"optimal", r.optimal_count},
                      {"unknown", r.unknown_count},
                      {"in_window", r.in_window},
                      {"below_by_1", r.below_by_1},
                      {"above_by_1", r.above_by_1},
                      {"farther", r.farther},
                      {"min_L", r.min_L},
                      {"max_L", r.max_L}};
    return j.dump(2) + "\n";
}

std::string to_json(const SisExperimentResult& r, bool include_timings) {
    ojson j;
    j["experiment"] = "sis";
    j["config"] = {{"n", r.config.n},
                   {"N", r.config.N},
                   {"trials", r.config.trials},
                   {"master_seed", r.config.master_seed},
                   {"budget", budget_json(r.config.budget)}};
    j["prediction"] = sis_prediction_json(r.prediction);
    ojson trials = ojson::array();
    for (const auto& rec : r.trials) {
        ojson t;
        t["trial_index"] = rec.trial_index;
        t["pattern_seed"] = seed_json(rec.pattern_seed);
        t["target_seed"] = seed_json(rec.target_seed);
        t["outcome"] = to_string(rec.outcome);
        t["nodes_explored"] = rec.nodes_explored;
        t["elapsed_millis"] = emitted_millis(rec.elapsed_millis, include_timings);
        trials.push_back(std::move(t));
    }
    j["trials"] = std::move(trials);
    j["aggregate"] = sis_summary_json(r.summary);
    return j.dump(2) + "\n";
}

std::string to_json(const SweepResult& r, bool include_timings) {
    ojson j;
    j["experiment"] = "sweep";
    j["config"] = {{"N", r.config.N},
                   {"n_from", r.config.n_from},
                   {"n_to", r.config.n_to},
                   {"trials_per_n", r.config.trials_per_n},
                   {"master_seed", r.config.master_seed},
                   {"budget", budget_json(r.config.budget)}};
    j["prediction"] = sis_prediction_json(r.prediction);
    ojson rows = ojson::array();
    for (const auto& row : r.per_n)
        rows.push_back(sis_summary_json(row.summary));
    j["rows"] = std::move(rows);
    j["empirical_transition"] =
        r.empirical_transition ? ojson(*r.empirical_transition) : ojson(nullptr);
    (void)include_timings;
    return j.dump(2) + "\n";
}

std::string to_text(const LcsExperimentResult& r) {
    std::ostringstream out;
    const auto& p = r.prediction;
    out << "L experiment: N=" << r.config.N << " trials=" << r.config.trials
        << " master_seed=" << r.config.master_seed << "\n";
    out << "predicted window: [" << p.lo << ", " << p.hi << "]  (x="
        << format_double(static_cast<double>(p.x))
        << " eps=" << format_double(static_cast<double>(p.eps)) << ")"
        << (p.boundary_flag ? "  [near-integer boundary]" : "") << "\n";
    for (const auto& rec : r.trials) {
        out << "  trial " << rec.trial_index << ": L=" << rec.L
            << (rec.optimal ? "" : " (lower bound, budget hit)")
            << "  nodes=" << rec.nodes_explored << "  millis="
            << static_cast<long long>(std::llround(rec.elapsed_millis)) << "  "
            << to_string(rec.classification) << "\n";
    }
    out << "summary: in_window=" << r.in_window << " below_by_1=" << r.below_by_1
        << " above_by_1=" << r.above_by_1 << " farther=" << r.farther
        << " unknown=" << r.unknown_count << " range=[" << r.min_L << ", " << r.max_L
        << "]\n";
    return out.str();
}

std::string to_text(const SisExperimentResult& r) {
    std::ostringstream out;
    const auto& s = r.summary;
    out << "P(n,N) experiment: n=" << s.n << " N=" << s.N << " trials=" << s.trials
        << " master_seed=" << r.config.master_seed << "\n";
    out << "prediction: y=" << format_double(static_cast<double>(r.prediction.y))
        << " eps=" << format_double(static_cast<double>(r.prediction.eps)) << " contain<="
        << r.prediction.n_contain << " exclude>=" << r.prediction.n_exclude << " ("
        << to_string(s.predicted) << ")\n";
    out << "successes=" << s.successes << " failures=" << s.failures
        << " unknowns=" << s.unknowns;
    if (s.p_hat)
        out << "  p_hat=" << format_double(*s.p_hat) << "  ci95=["
            << format_double(s.ci_low) << ", " << format_double(s.ci_high) << "]";
    if (s.inconclusive)
        out << "  INCONCLUSIVE (>10% unknowns)";
    out << "\n";
    return out.str();
}

std::string to_text(const SweepResult& r) {
    std::ostringstream out;
    out << "P(n,N) sweep: N=" << r.config.N << " n=" << r.config.n_from << ".."
        << r.config.n_to << " trials_per_n=" << r.config.trials_per_n
        << " master_seed=" << r.config.master_seed << "\n";
    out << "prediction: contain<=" << r.prediction.n_contain << " exclude>="
        << r.prediction.n_exclude << "\n";
    out << "   n  trials  success  fail  unknown    p_hat     ci95\n";
    for (const auto& row : r.per_n) {
        const auto& s = row.summary;
        char line[160];
        std::snprintf(line, sizeof line, "%4d  %6d  %7d  %4d  %7d  %7s  [%s, %s]%s\n",
                      s.n, s.trials, s.successes, s.failures, s.unknowns,
                      s.p_hat ? format_double(*s.p_hat).c_str() : "-",
                      format_double(s.ci_low).c_str(), format_double(s.ci_high).c_str(),
                      s.inconclusive ? "  INCONCLUSIVE" : "");
        out << line;
    }
    if (r.empirical_transition)
        out << "empirical transition (largest n with p_hat >= 1/2): "
            << *r.empirical_transition << "\n";
    return out.str();
}

} // namespace rgiso
