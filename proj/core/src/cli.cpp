#include "rgiso/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rgiso/dimacs.hpp"
#include "rgiso/experiments.hpp"
#include "rgiso/mcis.hpp"
#include "rgiso/random.hpp"
#include "rgiso/sis.hpp"
#include "rgiso/theory.hpp"

namespace rgiso {

namespace {

using ojson = nlohmann::ordered_json;

struct CommonOut {
    std::string format = "text";
    std::string out_path;
};

void emit(const std::string& payload, const CommonOut& common, std::ostream& out) {
    if (common.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(common.out_path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + common.out_path);
    f << payload;
    f.flush();
    if (!f)
        throw std::runtime_error("write failed: " + common.out_path);
}

void add_output_flags(CLI::App* cmd, CommonOut& common) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", common.out_path, "Write output to this file");
}

struct BudgetFlags {
    std::uint64_t max_nodes = 0;
    bool has_max_nodes = false;
    long long max_time_ms = 0;
    bool has_max_time = false;
    bool unlimited = false;

    SearchBudget resolve(const SearchBudget& fallback) const {
        if (unlimited)
            return SearchBudget::unlimited();
        SearchBudget b = fallback;
        if (has_max_nodes)
            b.max_nodes = max_nodes;
        if (has_max_time)
            b.max_time = std::chrono::milliseconds(max_time_ms);
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags, bool with_unlimited) {
    cmd->add_option("--max-nodes", flags.max_nodes, "Search node budget")
        ->each([&flags](const std::string&) { flags.has_max_nodes = true; });
    cmd->add_option("--max-time-ms", flags.max_time_ms, "Wall-clock budget in milliseconds")
        ->each([&flags](const std::string&) { flags.has_max_time = true; });
    if (with_unlimited)
        cmd->add_flag("--unlimited", flags.unlimited,
                      "Drop the default node budget entirely");
}

std::string fmt(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string fmt_mapping(const std::vector<std::pair<int, int>>& mapping) {
    std::ostringstream out;
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        if (i)
            out << ' ';
        out << mapping[i].first << "->" << mapping[i].second;
    }
    return out.str();
}

// ---- predict ----

std::string render_lcs_predictions(const std::vector<ThresholdPrediction>& rows,
                                   const std::string& format) {
    if (format == "json") {
        ojson arr = ojson::array();
        for (const auto& p : rows) {
            ojson j;
            j["N"] = p.N;
            j["x"] = static_cast<double>(p.x);
            j["eps"] = static_cast<double>(p.eps);
            j["lo"] = p.lo;
            j["hi"] = p.hi;
            j["boundary_flag"] = p.boundary_flag;
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "N,x,eps,lo,hi,boundary\n";
        for (const auto& p : rows)
            out << p.N << ',' << fmt(static_cast<double>(p.x), 6) << ','
                << fmt(static_cast<double>(p.eps), 6) << ',' << p.lo << ',' << p.hi << ','
                << (p.boundary_flag ? 1 : 0) << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "    N        x     eps   lo   hi\n";
    for (const auto& p : rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%5lld  %8.4f  %6.4f  %3lld  %3lld%s\n", p.N,
                      static_cast<double>(p.x), static_cast<double>(p.eps), p.lo, p.hi,
                      p.boundary_flag ? "  ~boundary" : "");
        out << line;
    }
    return out.str();
}

std::string render_sis_predictions(const std::vector<SisPrediction>& rows,
                                   const std::string& format) {
    if (format == "json") {
        ojson arr = ojson::array();
        for (const auto& p : rows) {
            ojson j;
            j["N"] = p.N;
            j["y"] = static_cast<double>(p.y);
            j["eps"] = static_cast<double>(p.eps);
            j["n_contain"] = p.n_contain;
            j["n_exclude"] = p.n_exclude;
            j["boundary_flag"] = p.boundary_flag;
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "N,y,eps,n_contain,n_exclude,boundary\n";
        for (const auto& p : rows)
            out << p.N << ',' << fmt(static_cast<double>(p.y), 6) << ','
                << fmt(static_cast<double>(p.eps), 6) << ',' << p.n_contain << ','
                << p.n_exclude << ',' << (p.boundary_flag ? 1 : 0) << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "    N        y     eps  contain  exclude\n";
    for (const auto& p : rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%5lld  %8.4f  %6.4f  %7lld  %7lld%s\n", p.N,
                      static_cast<double>(p.y), static_cast<double>(p.eps), p.n_contain,
                      p.n_exclude, p.boundary_flag ? "  ~boundary" : "");
        out << line;
    }
    return out.str();
}

// ---- solve result rendering ----

std::string render_solve(const SolveResult& r, const std::string& format) {
    if (format == "json") {
        ojson j;
        j["size"] = r.size;
        j["optimal"] = r.optimal;
        j["nodes_explored"] = r.nodes_explored;
        j["elapsed_millis"] = r.elapsed.count();
        ojson m = ojson::array();
        for (auto [u, v] : r.mapping)
            m.push_back(ojson::array({u, v}));
        j["mapping"] = std::move(m);
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "size,optimal,nodes,millis\n"
            << r.size << ',' << (r.optimal ? 1 : 0) << ',' << r.nodes_explored << ','
            << static_cast<long long>(std::llround(r.elapsed.count())) << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "size: " << r.size << "\n"
        << "optimal: " << (r.optimal ? "yes" : "no (budget exhausted)") << "\n"
        << "nodes: " << r.nodes_explored << "\n"
        << "millis: " << static_cast<long long>(std::llround(r.elapsed.count())) << "\n"
        << "mapping: " << fmt_mapping(r.mapping) << "\n";
    return out.str();
}

std::string render_sis(const SisResult& r, const std::optional<BigCount>& count,
                       const std::string& format) {
    if (format == "json") {
        ojson j;
        j["found"] = to_string(r.found);
        if (r.witness) {
            ojson m = ojson::array();
            for (auto [u, v] : *r.witness)
                m.push_back(ojson::array({u, v}));
            j["witness"] = std::move(m);
        } else {
            j["witness"] = nullptr;
        }
        j["nodes_explored"] = r.nodes_explored;
        j["elapsed_millis"] = r.elapsed.count();
        if (count)
            j["count"] = count->str();
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "found,nodes,millis" << (count ? ",count" : "") << "\n";
        out << to_string(r.found) << ',' << r.nodes_explored << ','
            << static_cast<long long>(std::llround(r.elapsed.count()));
        if (count)
            out << ',' << count->str();
        out << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "found: " << to_string(r.found) << "\n";
    if (r.witness)
        out << "witness: " << fmt_mapping(*r.witness) << "\n";
    out << "nodes: " << r.nodes_explored << "\n"
        << "millis: " << static_cast<long long>(std::llround(r.elapsed.count())) << "\n";
    if (count)
        out << "count: " << count->str() << "\n";
    return out.str();
}

std::vector<long long> expand_range(std::optional<long long> n_for,
                                    std::optional<long long> from,
                                    std::optional<long long> to) {
    if (n_for && (from || to))
        throw CLI::ValidationError("predict", "--n-for cannot be combined with --from/--to");
    if (n_for)
        return {*n_for};
    if (!from || !to)
        throw CLI::ValidationError("predict", "need either --n-for N or both --from and --to");
    if (*from > *to)
        throw CLI::ValidationError("predict", "--from must not exceed --to");
    std::vector<long long> out;
    for (long long N = *from; N <= *to; ++N)
        out.push_back(N);
    return out;
}

} // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random-graph isomorphism laboratory: generators, exact MCIS/SIS "
                 "solvers, threshold predictions, and Monte Carlo experiments."};
    app.name("rgiso");
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Sample G(n,p) and write DIMACS");
    int gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0, gen_stream = 0;
    CommonOut gen_out;
    gen->add_option("n", gen_n, "Vertex count")->required();
    gen->add_option("p", gen_p, "Edge probability")->required();
    gen->add_option("--seed", gen_seed, "Master seed")->capture_default_str();
    gen->add_option("--stream", gen_stream, "Sub-stream index")->capture_default_str();
    gen->add_option("-o,--output", gen_out.out_path, "Write DIMACS to this file");

    // rado
    auto* rado = app.add_subcommand("rado", "Deterministic binary-digit graph prefix");
    int rado_n = 0;
    CommonOut rado_out;
    rado->add_option("n", rado_n, "Vertex count")->required();
    rado->add_option("-o,--output", rado_out.out_path, "Write DIMACS to this file");

    // predict
    auto* predict = app.add_subcommand("predict", "Evaluate threshold predictions");
    predict->require_subcommand(1);
    auto* predict_lcs = predict->add_subcommand("lcs", "Two-point window for L_N");
    auto* predict_sis = predict->add_subcommand("sis", "Containment window for P(n,N)");
    std::optional<long long> pl_nfor, pl_from, pl_to, ps_nfor, ps_from, ps_to;
    CommonOut pl_out, ps_out;
    predict_lcs->add_option("--n-for", pl_nfor, "Single N to evaluate");
    predict_lcs->add_option("--from", pl_from, "Range start (inclusive)");
    predict_lcs->add_option("--to", pl_to, "Range end (inclusive)");
    add_output_flags(predict_lcs, pl_out);
    predict_sis->add_option("--n-for", ps_nfor, "Single N to evaluate");
    predict_sis->add_option("--from", ps_from, "Range start (inclusive)");
    predict_sis->add_option("--to", ps_to, "Range end (inclusive)");
    add_output_flags(predict_sis, ps_out);

    // mcis
    auto* mcis = app.add_subcommand("mcis", "Maximum common induced subgraph of two DIMACS graphs");
    std::string mcis_a, mcis_b;
    BudgetFlags mcis_budget;
    int mcis_target = -1;
    CommonOut mcis_out;
    mcis->add_option("graph1", mcis_a, "First DIMACS file")->required();
    mcis->add_option("graph2", mcis_b, "Second DIMACS file")->required();
    add_budget_flags(mcis, mcis_budget, /*with_unlimited=*/false);
    mcis->add_option("--target", mcis_target, "Stop once a common subgraph of this size is found");
    add_output_flags(mcis, mcis_out);

    // sis
    auto* sis = app.add_subcommand("sis", "Induced subgraph isomorphism (pattern in target)");
    std::string sis_pat, sis_tgt;
    BudgetFlags sis_budget;
    bool sis_count = false;
    CommonOut sis_out;
    sis->add_option("pattern", sis_pat, "Pattern DIMACS file")->required();
    sis->add_option("target", sis_tgt, "Target DIMACS file")->required();
    sis->add_flag("--count", sis_count, "Also count ordered induced embeddings (exact)");
    add_budget_flags(sis, sis_budget, /*with_unlimited=*/false);
    add_output_flags(sis, sis_out);

    // phi
    auto* phi = app.add_subcommand("phi", "Exact permutation-agreement sum phi(m,n)");
    int phi_m = 0, phi_n = 0;
    CommonOut phi_out;
    phi->add_option("m", phi_m, "Constrained prefix size")->required();
    phi->add_option("n", phi_n, "Permutation degree (at most 8)")->required();
    add_output_flags(phi, phi_out);

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Seeded Monte Carlo experiments");
    experiment->require_subcommand(1);

    auto* exp_lcs = experiment->add_subcommand("lcs", "Sample L_N against its predicted window");
    LcsExperimentConfig lcs_cfg;
    BudgetFlags lcs_budget_flags;
    CommonOut lcs_out;
    bool lcs_timings = false;
    exp_lcs->set_config("--config", "", "Read options from a flat key=value file");
    exp_lcs->add_option("--N", lcs_cfg.N, "Graph size")->required();
    exp_lcs->add_option("--trials", lcs_cfg.trials, "Number of trials")->capture_default_str();
    exp_lcs->add_option("--seed", lcs_cfg.master_seed, "Master seed")->capture_default_str();
    exp_lcs->add_option("--workers", lcs_cfg.workers, "Worker threads")
        ->envname("RGISO_WORKERS")
        ->capture_default_str();
    add_budget_flags(exp_lcs, lcs_budget_flags, /*with_unlimited=*/true);
    exp_lcs->add_flag("--timings", lcs_timings,
                      "Emit measured wall times in csv/json (breaks byte-reproducibility)");
    add_output_flags(exp_lcs, lcs_out);

    auto* exp_sis = experiment->add_subcommand("sis", "Estimate P(n,N) by sampling");
    SisExperimentConfig sis_cfg;
    sis_cfg.trials = 20;
    BudgetFlags sis_exp_budget_flags;
    CommonOut sis_exp_out;
    bool sis_timings = false;
    exp_sis->set_config("--config", "", "Read options from a flat key=value file");
    exp_sis->add_option("--n", sis_cfg.n, "Pattern size")->required();
    exp_sis->add_option("--N", sis_cfg.N, "Target size")->required();
    exp_sis->add_option("--trials", sis_cfg.trials, "Number of trials")->capture_default_str();
    exp_sis->add_option("--seed", sis_cfg.master_seed, "Master seed")->capture_default_str();
    exp_sis->add_option("--workers", sis_cfg.workers, "Worker threads")
        ->envname("RGISO_WORKERS")
        ->capture_default_str();
    add_budget_flags(exp_sis, sis_exp_budget_flags, /*with_unlimited=*/true);
    exp_sis->add_flag("--timings", sis_timings,
                      "Emit measured wall times in csv/json (breaks byte-reproducibility)");
    add_output_flags(exp_sis, sis_exp_out);

    auto* exp_sweep = experiment->add_subcommand("sweep", "Sweep n across the P(n,N) window");
    SweepConfig sweep_cfg;
    sweep_cfg.trials_per_n = 20;
    BudgetFlags sweep_budget_flags;
    CommonOut sweep_out;
    bool sweep_timings = false;
    exp_sweep->set_config("--config", "", "Read options from a flat key=value file");
    exp_sweep->add_option("--N", sweep_cfg.N, "Target size")->required();
    exp_sweep->add_option("--n-from", sweep_cfg.n_from, "Smallest pattern size")->required();
    exp_sweep->add_option("--n-to", sweep_cfg.n_to, "Largest pattern size")->required();
    exp_sweep->add_option("--trials-per-n", sweep_cfg.trials_per_n, "Trials per pattern size")
        ->capture_default_str();
    exp_sweep->add_option("--seed", sweep_cfg.master_seed, "Master seed")->capture_default_str();
    exp_sweep->add_option("--workers", sweep_cfg.workers, "Worker threads")
        ->envname("RGISO_WORKERS")
        ->capture_default_str();
    add_budget_flags(exp_sweep, sweep_budget_flags, /*with_unlimited=*/true);
    exp_sweep->add_flag("--timings", sweep_timings,
                        "Emit measured wall times in json (breaks byte-reproducibility)");
    add_output_flags(exp_sweep, sweep_out);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (gen->parsed()) {
            const Graph g = gnp_sample(gen_n, gen_p, Seed{gen_seed, gen_stream});
            std::ostringstream payload;
            write_dimacs(g, payload);
            emit(payload.str(), gen_out, out);
            return 0;
        }
        if (rado->parsed()) {
            std::ostringstream payload;
            write_dimacs(rado_prefix(rado_n), payload);
            emit(payload.str(), rado_out, out);
            return 0;
        }
        if (predict_lcs->parsed()) {
            std::vector<ThresholdPrediction> rows;
            for (long long N : expand_range(pl_nfor, pl_from, pl_to))
                rows.push_back(lcs_threshold(N));
            emit(render_lcs_predictions(rows, pl_out.format), pl_out, out);
            return 0;
        }
        if (predict_sis->parsed()) {
            std::vector<SisPrediction> rows;
            for (long long N : expand_range(ps_nfor, ps_from, ps_to))
                rows.push_back(sis_threshold(N));
            emit(render_sis_predictions(rows, ps_out.format), ps_out, out);
            return 0;
        }
        if (mcis->parsed()) {
            const Graph a = read_dimacs(mcis_a);
            const Graph b = read_dimacs(mcis_b);
            SearchBudget budget = mcis_budget.resolve(SearchBudget::unlimited());
            if (mcis_target >= 0)
                budget.target = mcis_target;
            emit(render_solve(max_common_induced_subgraph(a, b, budget), mcis_out.format),
                 mcis_out, out);
            return 0;
        }
        if (sis->parsed()) {
            const Graph pattern = read_dimacs(sis_pat);
            const Graph target = read_dimacs(sis_tgt);
            const SisResult r =
                contains_induced(pattern, target, sis_budget.resolve(SearchBudget::unlimited()));
            std::optional<BigCount> count;
            if (sis_count)
                count = count_induced_embeddings(pattern, target);
            emit(render_sis(r, count, sis_out.format), sis_out, out);
            return 0;
        }
        if (phi->parsed()) {
            const PhiResult r = phi_exact(phi_m, phi_n);
            std::string payload;
            if (phi_out.format == "json") {
                ojson j;
                j["m"] = r.m;
                j["n"] = r.n;
                j["numerator"] = r.numerator;
                j["denom_pow2"] = r.denom_pow2;
                j["value"] = r.value();
                payload = j.dump(2) + "\n";
            } else if (phi_out.format == "csv") {
                std::ostringstream s;
                s << "m,n,numerator,denom_pow2,value\n"
                  << r.m << ',' << r.n << ',' << r.numerator << ',' << r.denom_pow2 << ','
                  << fmt(r.value(), 6) << '\n';
                payload = s.str();
            } else {
                std::ostringstream s;
                s << "phi(" << r.m << "," << r.n << ") = " << r.numerator << "/2^"
                  << r.denom_pow2 << " = " << fmt(r.value(), 6) << "\n";
                payload = s.str();
            }
            emit(payload, phi_out, out);
            return 0;
        }
        if (exp_lcs->parsed()) {
            lcs_cfg.budget = lcs_budget_flags.resolve(default_lcs_budget());
            const LcsExperimentResult r = run_lcs_trials(lcs_cfg);
            std::string payload;
            if (lcs_out.format == "csv")
                payload = to_csv(r, lcs_timings);
            else if (lcs_out.format == "json")
                payload = to_json(r, lcs_timings);
            else
                payload = to_text(r);
            emit(payload, lcs_out, out);
            return 0;
        }
        if (exp_sis->parsed()) {
            sis_cfg.budget = sis_exp_budget_flags.resolve(default_sis_budget());
            const SisExperimentResult r = run_sis_trials(sis_cfg);
            std::string payload;
            if (sis_exp_out.format == "csv")
                payload = to_csv(r, sis_timings);
            else if (sis_exp_out.format == "json")
                payload = to_json(r, sis_timings);
            else
                payload = to_text(r);
            emit(payload, sis_exp_out, out);
            return 0;
        }
        if (exp_sweep->parsed()) {
            sweep_cfg.budget = sweep_budget_flags.resolve(default_sis_budget());
            const SweepResult r = sweep_sis_window(sweep_cfg);
            std::string payload;
            if (sweep_out.format == "csv")
                payload = to_csv(r);
            else if (sweep_out.format == "json")
                payload = to_json(r, sweep_timings);
            else
                payload = to_text(r);
            emit(payload, sweep_out, out);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

} // namespace rgiso
