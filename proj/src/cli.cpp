#include "bagraph/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bagraph/analysis.hpp"
#include "bagraph/experiments.hpp"
#include "bagraph/formulas.hpp"
#include "bagraph/gen.hpp"
#include "bagraph/io.hpp"

#ifndef BAGRAPH_VERSION
#define BAGRAPH_VERSION "0.0.0"
#endif

namespace bagraph::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

/// Usage or validation problem detected after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

unsigned default_threads() {
    if (const char* env = std::getenv(threads_env)) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw UsageError(std::string(threads_env) + " must be a non-negative integer");
        }
    }
    return 0;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw UsageError("cannot open output file '" + path + "'");
    return os;
}

void write_manifest(const std::string& path, const std::string& subcommand, Json config, std::uint64_t master_seed,
                    const std::string& started, Clock::time_point t0, const std::vector<std::string>& outputs) {
    Json manifest;
    manifest["tool"] = "bagraph";
    manifest["version"] = BAGRAPH_VERSION;
    manifest["subcommand"] = subcommand;
    manifest["master_seed"] = master_seed;
    manifest["config"] = std::move(config);
    manifest["outputs"] = outputs;
    manifest["started_utc"] = started;
    manifest["wall_seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
    auto os = open_output(path);
    os << manifest.dump(2) << '\n';
}

// ---------------------------------------------------------------- generate

struct GenerateFlags {
    std::uint32_t n = 0;
    std::optional<std::uint32_t> k;
    std::optional<double> p;
    std::string model = "bilateral";
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string out;
};

int cmd_generate(const GenerateFlags& f, std::ostream& out) {
    const auto started = utc_timestamp();
    const auto t0 = Clock::now();
    if (f.p && !(*f.p >= 0.0 && *f.p <= 1.0)) throw UsageError("--p must lie in [0,1]");
    const ModelKind kind = parse_model_kind(f.model);
    ModelParams params{f.n, 0, kind, 0.0};
    if (kind == ModelKind::erdos_renyi) {
        if (!f.p) throw UsageError("--model er requires --p");
        params.p = *f.p;
    } else {
        if (!f.k) throw UsageError("--model " + f.model + " requires --k");
        params.k = *f.k;
    }
    params.validate();
    const SeedSpec seed{f.seed, f.stream};
    const auto graph = generate(params, seed);
    {
        auto os = open_output(f.out);
        write_edge_list(os, graph);
    }
    Json config;
    config["n"] = params.n;
    if (kind == ModelKind::erdos_renyi) config["p"] = params.p;
    else config["k"] = params.k;
    config["model"] = std::string(to_string(kind));
    config["seed"] = f.seed;
    config["stream"] = f.stream;
    config["out"] = f.out;
    const std::string manifest_path = f.out + ".manifest.json";
    write_manifest(manifest_path, "generate", std::move(config), f.seed, started, t0, {f.out});
    out << "wrote " << graph.edge_count() << " edges to " << f.out << '\n';
    return exit_success;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeFlags {
    std::string in;
    std::uint32_t n = 0;
};

int cmd_analyze(const AnalyzeFlags& f, std::ostream& out) {
    std::ifstream is(f.in, std::ios::binary);
    if (!is) throw UsageError("cannot open input file '" + f.in + "'");
    const auto graph = read_edge_list(is, f.n);
    out << to_json(analyze(graph)).dump(2) << '\n';
    return exit_success;
}

// ------------------------------------------------------------------- sweep

struct SweepFlags {
    std::vector<std::uint32_t> n_list;
    std::vector<std::uint32_t> k_list;
    std::vector<double> t_list;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string model = "bilateral";
    std::string out;
    std::optional<unsigned> threads;
    std::uint64_t memory_budget_mb = 2048;
};

int cmd_sweep(const SweepFlags& f, std::ostream& out, std::ostream& err) {
    const auto started = utc_timestamp();
    const auto t0 = Clock::now();
    if (f.k_list.empty() == f.t_list.empty()) throw UsageError("give exactly one of --k-list or --t-list");
    if (f.trials < 1) throw UsageError("--trials must be >= 1");
    const ModelKind kind = parse_model_kind(f.model);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
    Json resolved = Json::array();
    for (const auto n : f.n_list) {
        if (!f.k_list.empty()) {
            for (const auto k : f.k_list) cells.emplace_back(n, k);
            continue;
        }
        for (const auto t : f.t_list) {
            ThresholdParams tp;
            tp.t = t;
            const auto k = threshold_k(n, tp, ThresholdForm::t_form);
            if (k.clamped) err << "warning: floor(" << t << " log " << n << ") < 1, using k=1\n";
            cells.emplace_back(n, static_cast<std::uint32_t>(k.k));
            resolved.push_back(Json{{"n", n}, {"t", t}, {"k", k.k}, {"clamped", k.clamped}});
        }
    }

    RunOptions options;
    options.threads = f.threads ? *f.threads : default_threads();
    options.memory_budget_bytes = f.memory_budget_mb << 20;
    const auto results = run_sweep(cells, f.trials, SeedSpec{f.seed, 0}, kind, options);
    {
        auto os = open_output(f.out);
        write_sweep_csv(os, results);
    }

    Json config;
    config["n_list"] = f.n_list;
    if (!f.k_list.empty()) config["k_list"] = f.k_list;
    else config["t_list"] = f.t_list;
    config["resolved_cells"] = resolved;
    config["trials"] = f.trials;
    config["seed"] = f.seed;
    config["model"] = std::string(to_string(kind));
    config["threads"] = options.threads;
    config["memory_budget_mb"] = f.memory_budget_mb;
    config["out"] = f.out;
    write_manifest(f.out + ".manifest.json", "sweep", std::move(config), f.seed, started, t0, {f.out});
    out << "wrote " << results.size() << " cells to " << f.out << '\n';
    return exit_success;
}

// ---------------------------------------------------------------- formulas

struct FormulaFlags {
    std::uint32_t k = 0;
    double k_real = 0.0;
    std::optional<std::uint32_t> i;
    std::optional<std::uint32_t> j;
    bool sum = false;
    std::uint64_t n = 0;
    double t = 1.0;
    double t_prime = 0.0;
    std::string form = "t";
};

void print_mean_degree(const FormulaFlags& f, std::ostream& out) {
    out << "k,mean_degree_limit,exact\n";
    out << f.k << ',' << format_real(mean_degree_limit(f.k)) << ',';
    if (f.k <= exact_k_limit) out << to_fraction_string(mean_degree_limit_exact(f.k));
    out << '\n';
}

void print_conn_prob(const FormulaFlags& f, std::ostream& out) {
    out << "i,k,conn_prob,exact\n";
    const std::uint32_t first = f.i.value_or(1);
    const std::uint32_t last = f.i.value_or(f.k);
    for (std::uint32_t i = first; i <= last; ++i) {
        const auto p = conn_prob_by_rank(i, f.k);
        out << i << ',' << f.k << ',' << format_real(p.get_d()) << ',' << to_fraction_string(p) << '\n';
    }
}

void print_negbin(const FormulaFlags& f, std::ostream& out) {
    if (f.sum) {
        Rational total = 0;
        for (std::uint32_t j = 0; j < f.k; ++j) total += negbin_pmf(f.k, j);
        out << "k,sum_below_k,exact\n" << f.k << ',' << format_real(total.get_d()) << ',' << to_fraction_string(total)
            << '\n';
        return;
    }
    out << "k,j,negbin_pmf,exact\n";
    const std::uint32_t first = f.j.value_or(0);
    const std::uint32_t last = f.j.value_or(f.k - 1);
    for (std::uint32_t j = first; j <= last; ++j) {
        const auto p = negbin_pmf(f.k, j);
        out << f.k << ',' << j << ',' << format_real(p.get_d()) << ',' << to_fraction_string(p) << '\n';
    }
}

void print_threshold(const FormulaFlags& f, std::ostream& out) {
    ThresholdParams tp;
    tp.t = f.t;
    tp.t_prime = f.t_prime;
    ThresholdForm form = ThresholdForm::t_form;
    if (f.form == "t-prime") form = ThresholdForm::t_prime_form;
    else if (f.form == "disc") form = ThresholdForm::disc_form;
    else if (f.form != "t") throw UsageError("--form must be one of t, t-prime, disc");
    const auto k = threshold_k(f.n, tp, form);
    out << "n,form,k,clamped\n" << f.n << ',' << f.form << ',' << k.k << ',' << (k.clamped ? "true" : "false") << '\n';
}

// ------------------------------------------------------------------- main

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

int run_verify(const verify::VerifyOptions& options, const verify::FormulaSet& formulas, std::ostream& out,
               std::ostream& err) {
    const auto results = verify::run_all(options, formulas);
    const verify::SuiteResult* first_failed = nullptr;
    for (const auto& r : results) {
        out << r.name << ": " << r.passed << '/' << r.total << (r.ok() ? " passed" : " FAILED") << '\n';
        if (!r.ok() && !first_failed) first_failed = &r;
    }
    if (first_failed) {
        err << "verification failed in suite " << first_failed->name << ": " << first_failed->first_failure.value_or("")
            << '\n';
        return exit_verification_failed;
    }
    out << "all " << results.size() << " suites passed\n";
    return exit_success;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bilateral agreement random graph laboratory", "bagraph"};
    app.require_subcommand(1);
    app.set_version_flag("--version", BAGRAPH_VERSION);

    GenerateFlags gen;
    auto* generate_cmd = app.add_subcommand("generate", "Realize one random graph as a CSV edge list");
    generate_cmd->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    generate_cmd->add_option("--k", gen.k, "Preference budget (bilateral/unilateral)");
    generate_cmd->add_option("--p", gen.p, "Edge probability (er)");
    generate_cmd->add_option("--model", gen.model, "bilateral | unilateral | er")->capture_default_str();
    generate_cmd->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
    generate_cmd->add_option("--stream", gen.stream, "Stream index")->capture_default_str();
    generate_cmd->add_option("--out", gen.out, "Output CSV path")->required();

    AnalyzeFlags ana;
    auto* analyze_cmd = app.add_subcommand("analyze", "Print the structural report of an edge-list file as JSON");
    analyze_cmd->add_option("--in", ana.in, "Edge-list CSV")->required();
    analyze_cmd->add_option("--n", ana.n, "Vertex count")->required()->check(CLI::PositiveNumber);

    SweepFlags sw;
    std::string n_list, k_list, t_list;
    unsigned threads = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo connectivity sweep over (n, k) cells");
    sweep_cmd->add_option("--n-list", n_list, "Comma-separated vertex counts")->required();
    auto* k_opt = sweep_cmd->add_option("--k-list", k_list, "Comma-separated preference budgets");
    auto* t_opt = sweep_cmd->add_option("--t-list", t_list, "Comma-separated multipliers, k = floor(t log n)");
    k_opt->excludes(t_opt);
    sweep_cmd->add_option("--trials", sw.trials, "Trials per cell")->required();
    sweep_cmd->add_option("--seed", sw.seed, "Master seed")->capture_default_str();
    sweep_cmd->add_option("--model", sw.model, "bilateral | unilateral | er")->capture_default_str();
    sweep_cmd->add_option("--out", sw.out, "Output CSV path")->required();
    auto* threads_opt = sweep_cmd->add_option("--threads", threads, "Worker cap (default: $BAGRAPH_THREADS or all cores)");
    sweep_cmd->add_option("--memory-budget-mb", sw.memory_budget_mb, "Working-set budget")->capture_default_str();

    FormulaFlags fo;
    auto* formulas_cmd = app.add_subcommand("formulas", "Evaluate closed forms and bounds");
    formulas_cmd->require_subcommand(1);
    auto* f_mean = formulas_cmd->add_subcommand("mean-degree", "Limiting mean degree");
    f_mean->add_option("--k", fo.k)->required()->check(CLI::PositiveNumber);
    auto* f_asym = formulas_cmd->add_subcommand("asymptotic", "k - sqrt(k/pi) + 1/(8 sqrt(pi k))");
    f_asym->add_option("--k", fo.k_real)->required();
    auto* f_conn = formulas_cmd->add_subcommand("conn-prob", "Limiting connection probability by preference rank");
    f_conn->add_option("--k", fo.k)->required()->check(CLI::PositiveNumber);
    f_conn->add_option("--i", fo.i, "Single rank (default: all 1..k)");
    auto* f_window = formulas_cmd->add_subcommand("window", "Order-statistic window and coupling probabilities");
    f_window->add_option("--n", fo.n)->required();
    f_window->add_option("--t", fo.t)->required();
    auto* f_pi = formulas_cmd->add_subcommand("pi-bound", "Component-size union bound");
    f_pi->add_option("--n", fo.n)->required();
    f_pi->add_option("--t", fo.t)->required();
    auto* f_negbin = formulas_cmd->add_subcommand("negbin", "Fair negative binomial pmf");
    f_negbin->add_option("--k", fo.k)->required()->check(CLI::PositiveNumber);
    auto* j_opt = f_negbin->add_option("--j", fo.j, "Single j (default: 0..k-1)");
    f_negbin->add_flag("--sum", fo.sum, "Print sum_{j<k} pmf")->excludes(j_opt);
    auto* f_erlang = formulas_cmd->add_subcommand("erlang", "Erlang-integral mean degree");
    f_erlang->add_option("--k", fo.k)->required()->check(CLI::PositiveNumber);
    auto* f_threshold = formulas_cmd->add_subcommand("threshold", "Threshold k for a given n");
    f_threshold->add_option("--n", fo.n)->required();
    f_threshold->add_option("--t", fo.t)->capture_default_str();
    f_threshold->add_option("--t-prime", fo.t_prime)->capture_default_str();
    f_threshold->add_option("--form", fo.form, "t | t-prime | disc")->capture_default_str();

    verify::VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Run the exact oracle and identity suites");
    verify_cmd->add_option("--max-m", vo.max_m, "Largest urn enumerated")->capture_default_str()->check(CLI::Range(2, 11));
    verify_cmd->add_option("--max-k", vo.max_k, "Largest k in identity suites")->capture_default_str()->check(CLI::Range(1, 512));

    std::vector<const char*> argv{"bagraph"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_usage;
    }

    try {
        if (*generate_cmd) return cmd_generate(gen, out);
        if (*analyze_cmd) return cmd_analyze(ana, out);
        if (*sweep_cmd) {
            auto to_u32 = [](const std::string& s) {
                std::size_t used = 0;
                const auto v = std::stoul(s, &used);
                if (used != s.size() || v > 0xffffffffUL) throw UsageError("invalid integer '" + s + "'");
                return static_cast<std::uint32_t>(v);
            };
            auto to_real = [](const std::string& s) {
                std::size_t used = 0;
                const double v = std::stod(s, &used);
                if (used != s.size()) throw UsageError("invalid number '" + s + "'");
                return v;
            };
            try {
                for (const auto& s : split_list(n_list)) sw.n_list.push_back(to_u32(s));
                for (const auto& s : split_list(k_list)) sw.k_list.push_back(to_u32(s));
                for (const auto& s : split_list(t_list)) sw.t_list.push_back(to_real(s));
            } catch (const std::logic_error&) {
                throw UsageError("malformed list argument");
            }
            if (sw.n_list.empty()) throw UsageError("--n-list is empty");
            if (*threads_opt) sw.threads = threads;
            return cmd_sweep(sw, out, err);
        }
        if (*formulas_cmd) {
            if (*f_mean) print_mean_degree(fo, out);
            else if (*f_asym) out << "k,mean_degree_asymptotic\n" << format_real(fo.k_real) << ',' << format_real(mean_degree_asymptotic(fo.k_real)) << '\n';
            else if (*f_conn) print_conn_prob(fo, out);
            else if (*f_window) {
                const auto w = an_window(fo.n, fo.t);
                out << "n,t,lower,upper,p_bar,p_underbar\n"
                    << fo.n << ',' << format_real(fo.t) << ',' << format_real(w.lower) << ',' << format_real(w.upper)
                    << ',' << format_real(w.p_bar) << ',' << format_real(w.p_underbar) << '\n';
            } else if (*f_pi) {
                out << "n,t,pi_bound\n" << fo.n << ',' << format_real(fo.t) << ',' << format_real(component_bound_pi(fo.n, fo.t)) << '\n';
            } else if (*f_negbin) print_negbin(fo, out);
            else if (*f_erlang) out << "k,erlang_integral\n" << fo.k << ',' << format_real(erlang_integral_mean_degree(fo.k)) << '\n';
            else if (*f_threshold) print_threshold(fo, out);
            return exit_success;
        }
        if (*verify_cmd) return run_verify(vo, verify::FormulaSet::library(), out, err);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

}  // namespace bagraph::cli
