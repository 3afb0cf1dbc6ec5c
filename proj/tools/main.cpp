// twotype: generate and analyze two-type random graphs (Erdos-Renyi,
// configuration model, preferential attachment), evaluate the closed-form
// critical parameters and degree exponents, and run experiment sweeps.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "twotype/analysis.hpp"
#include "twotype/analytic.hpp"
#include "twotype/degree_dist.hpp"
#include "twotype/errors.hpp"
#include "twotype/experiments.hpp"
#include "twotype/generators.hpp"
#include "twotype/graph_io.hpp"
#include "twotype/version.hpp"

using namespace twotype;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// "poisson:0.5", "ys-mean:1.2", "ys-shape:6", "explicit:path"
DegreeDistribution parse_dist(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("degree distribution", "expected kind:value, got '" + s + "'");
    const std::string kind = s.substr(0, colon);
    const std::string arg = s.substr(colon + 1);
    if (kind == "explicit") return DegreeDistribution::explicit_from_file(arg);
    const double v = std::stod(arg);
    if (kind == "poisson") return DegreeDistribution::poisson(v);
    if (kind == "ys-mean") return DegreeDistribution::yule_simon_from_mean(v);
    if (kind == "ys-shape") return DegreeDistribution::yule_simon(v);
    throw CLI::ValidationError("degree distribution", "unknown kind '" + kind + "'");
}

ExtReal parse_nu(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "infinity") return ExtReal::inf();
    return std::stod(s);
}

struct GenCommon {
    std::uint64_t seed = 0;
    std::string out;
};

void write_graph_file(const TypedGraph& g, const std::string& model, std::uint64_t seed,
                      const std::string& params_desc, const std::string& out) {
    EdgeListFile f;
    f.graph = g;
    f.model = model;
    f.seed = seed;
    f.extra_header = {"# params: " + params_desc,
                      "# tool: twotype " + std::string(kToolVersion)};
    write_edge_list(f, out);
    std::cout << "wrote " << out << " (" << g.n << " vertices, " << g.edges.size() << " edges)\n";
}

int run_analyze(const std::string& in_path, const std::string& out_dir, std::uint64_t k_min_opt,
                std::uint64_t k_max_opt) {
    const EdgeListFile f = read_edge_list(in_path);
    f.graph.validate();
    const ComponentReport comp = components(f.graph);
    const DegreeReport deg = degree_report(f.graph);

    std::filesystem::create_directories(out_dir);
    const std::string stem = out_dir + "/" +
                             std::filesystem::path(in_path).stem().string();
    {
        std::ofstream out(stem + ".components.csv", std::ios::binary);
        out << "# twotype " << kToolVersion << " source=" << in_path << " model=" << f.model
            << " seed=" << f.seed << "\n";
        out << "rank,size,fraction\n";
        for (std::size_t i = 0; i < comp.sizes_desc.size(); ++i)
            out << i + 1 << "," << comp.sizes_desc[i] << ","
                << format_double(static_cast<double>(comp.sizes_desc[i]) /
                                 static_cast<double>(f.graph.n))
                << "\n";
    }
    {
        std::ofstream out(stem + ".degrees.csv", std::ios::binary);
        out << "# twotype " << kToolVersion << " source=" << in_path << " model=" << f.model
            << " seed=" << f.seed << "\n";
        out << "type,k,count_ge,fraction_ge\n";
        for (int i = 0; i < 2; ++i)
            for (const CcdfEntry& e : deg.ccdf[i])
                out << i + 1 << "," << e.k << "," << e.count_ge << ","
                    << format_double(e.fraction_ge) << "\n";
    }
    {
        std::ofstream out(stem + ".pair_degrees.csv", std::ios::binary);
        out << "# twotype " << kToolVersion << " source=" << in_path << " model=" << f.model
            << " seed=" << f.seed << "\n";
        out << "type,to_type,k,count_ge,fraction_ge\n";
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (const CcdfEntry& e : deg.pair_ccdf[i][j])
                    out << i + 1 << "," << j + 1 << "," << e.k << "," << e.count_ge << ","
                        << format_double(e.fraction_ge) << "\n";
    }

    std::cout << "n=" << f.graph.n << " edges=" << f.graph.edges.size() << "\n";
    std::cout << "largest component: " << (comp.sizes_desc.empty() ? 0 : comp.sizes_desc[0])
              << " (fraction " << fmt6(comp.largest_fraction) << ", type1 " << comp.largest_type1
              << ", type2 " << comp.largest_type2 << ")\n";
    std::cout << "cross-degree means: n11=" << fmt6(deg.cross_mean[0][0])
              << " n12=" << fmt6(deg.cross_mean[0][1]) << " n21=" << fmt6(deg.cross_mean[1][0])
              << " n22=" << fmt6(deg.cross_mean[1][1]) << "\n";
    for (int i = 0; i < 2; ++i) {
        const std::uint64_t k_max = k_max_opt ? k_max_opt : default_fit_kmax(deg.ccdf[i]);
        const std::uint64_t k_min = k_min_opt ? k_min_opt : kDefaultFitKmin;
        std::cout << "type " << i + 1 << " tail exponent: ";
        try {
            const ExponentFit fit = fit_tail_exponent(deg.ccdf[i], k_min, k_max);
            std::cout << "gamma_hat=" << fmt6(fit.gamma_hat) << " (k in [" << fit.k_min << ","
                      << fit.k_max << "], " << fit.n_points << " points, r2="
                      << fmt6(fit.r_squared) << ")\n";
        } catch (const std::exception& e) {
            std::cout << "unavailable (" << e.what() << ")\n";
        }
    }
    std::cout << "reports written to " << stem << ".*.csv\n";
    return kExitOk;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("TWOTYPE_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-type random graph toolkit"};
    app.set_version_flag("--version", std::string("twotype ") + kToolVersion);
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph and write an edge list");
    gen->require_subcommand(1);

    auto* gen_er = gen->add_subcommand("er", "two-type Erdos-Renyi graph");
    std::uint64_t er_n = 10000;
    double er_p1 = 0.5;
    std::optional<double> er_a1, er_a2, er_mu1, er_mu2;
    double er_beta = 0.5;
    GenCommon er_common;
    gen_er->add_option("--n", er_n, "number of vertices")->required();
    gen_er->add_option("--p1", er_p1, "probability of type 1")->required();
    gen_er->add_option("--alpha1", er_a1, "own-type rate of type 1");
    gen_er->add_option("--alpha2", er_a2, "own-type rate of type 2");
    gen_er->add_option("--mu1", er_mu1, "mean degree of type 1 (implies alpha1)");
    gen_er->add_option("--mu2", er_mu2, "mean degree of type 2 (implies alpha2)");
    gen_er->add_option("--beta", er_beta, "cross-type rate")->required();
    gen_er->add_option("--seed", er_common.seed, "rng seed")->required();
    gen_er->add_option("--out", er_common.out, "output edge-list path")->required();

    auto* gen_cm = gen->add_subcommand("cm", "two-type configuration model");
    std::uint64_t cm_n = 10000;
    double cm_p1 = 0.5, cm_xi1 = 1.0;
    std::optional<double> cm_xi2;
    std::string cm_f1 = "poisson:1.0", cm_f2 = "poisson:1.0";
    GenCommon cm_common;
    gen_cm->add_option("--n", cm_n, "number of vertices")->required();
    gen_cm->add_option("--p1", cm_p1, "probability of type 1")->required();
    gen_cm->add_option("--f1", cm_f1, "degree distribution of type 1 (poisson:m|ys-mean:m|ys-shape:r|explicit:file)")
        ->required();
    gen_cm->add_option("--f2", cm_f2, "degree distribution of type 2")->required();
    gen_cm->add_option("--xi1", cm_xi1, "own-label probability of type 1")->required();
    gen_cm->add_option("--xi2", cm_xi2, "own-label probability of type 2 (default: from balance)");
    gen_cm->add_option("--seed", cm_common.seed, "rng seed")->required();
    gen_cm->add_option("--out", cm_common.out, "output edge-list path")->required();

    auto* gen_pa = gen->add_subcommand("pa", "two-type preferential attachment graph");
    std::uint64_t pa_t = 1000000;
    double pa_p1 = 0.5, pa_th1 = 0.5, pa_th2 = 0.5;
    GenCommon pa_common;
    gen_pa->add_option("--t", pa_t, "final time (graph has t+1 vertices)")->required();
    gen_pa->add_option("--p1", pa_p1, "probability of type 1")->required();
    gen_pa->add_option("--theta1", pa_th1, "own-type attachment probability of type 1")->required();
    gen_pa->add_option("--theta2", pa_th2, "own-type attachment probability of type 2")->required();
    gen_pa->add_option("--seed", pa_common.seed, "rng seed")->required();
    gen_pa->add_option("--out", pa_common.out, "output edge-list path")->required();

    // ---- analytic -----------------------------------------------------
    auto* analytic = app.add_subcommand("analytic", "print closed-form quantities");
    analytic->require_subcommand(1);

    auto* an_er = analytic->add_subcommand("er", "critical parameter of the two-type ER graph");
    double aer_p1 = 0.5, aer_beta = 0.5;
    std::optional<double> aer_a1, aer_a2, aer_mu1, aer_mu2;
    an_er->add_option("--p1", aer_p1)->required();
    an_er->add_option("--alpha1", aer_a1);
    an_er->add_option("--alpha2", aer_a2);
    an_er->add_option("--mu1", aer_mu1);
    an_er->add_option("--mu2", aer_mu2);
    an_er->add_option("--beta", aer_beta)->required();

    auto* an_cm = analytic->add_subcommand("cm", "critical parameter of the two-type configuration model");
    double acm_xi1 = 0.5, acm_xi2 = 0.5;
    std::string acm_nu1 = "1", acm_nu2 = "1";
    an_cm->add_option("--xi1", acm_xi1)->required();
    an_cm->add_option("--xi2", acm_xi2)->required();
    an_cm->add_option("--nu1", acm_nu1, "size-biased mean (number or 'inf')")->required();
    an_cm->add_option("--nu2", acm_nu2, "size-biased mean (number or 'inf')")->required();

    auto* an_pa = analytic->add_subcommand("pa", "exponents and cross degrees of preferential attachment");
    double apa_p1 = 0.5, apa_th1 = 0.5, apa_th2 = 0.5;
    an_pa->add_option("--p1", apa_p1)->required();
    an_pa->add_option("--theta1", apa_th1)->required();
    an_pa->add_option("--theta2", apa_th2)->required();

    // ---- analyze ------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "component and degree reports for an edge list");
    std::string analyze_in, analyze_out = ".";
    std::uint64_t analyze_kmin = 0, analyze_kmax = 0;
    analyze->add_option("--in", analyze_in, "edge-list file")->required();
    analyze->add_option("--out-dir", analyze_out, "directory for CSV reports");
    analyze->add_option("--kmin", analyze_kmin, "tail-fit lower bound (default 10)");
    analyze->add_option("--kmax", analyze_kmax, "tail-fit upper bound (default: count>=50 rule)");

    // ---- experiment ---------------------------------------------------
    auto* experiment = app.add_subcommand("experiment", "run a sweep preset or config");
    std::string exp_preset, exp_config, exp_out = ".";
    std::optional<std::uint64_t> exp_seed, exp_n, exp_t, exp_reps;
    unsigned exp_jobs = default_jobs();
    bool exp_list = false, exp_full_scale = false;
    experiment->add_option("--preset", exp_preset, "preset name (see --list)");
    experiment->add_option("--config", exp_config, "sweep config JSON path");
    experiment->add_option("--out-dir", exp_out, "output directory");
    experiment->add_option("--seed", exp_seed, "override the master seed");
    experiment->add_option("--n", exp_n, "override n (ER/CM)");
    experiment->add_option("--t", exp_t, "override t (PA)");
    experiment->add_option("--reps", exp_reps, "override the replicate count");
    experiment->add_option("--jobs", exp_jobs, "worker threads (default: TWOTYPE_JOBS or 1)");
    experiment->add_flag("--list", exp_list, "list the preset catalog and exit");
    experiment->add_flag("--full-scale", exp_full_scale,
                         "PA presets at the full t=1e9 (hours of runtime, ~8 GiB of state)");

    auto* export_presets = app.add_subcommand("export-presets", "write every preset as a JSON config");
    std::string export_dir = "presets";
    export_presets->add_option("--dir", export_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_er->parsed()) {
            if (er_mu1) er_a1 = er_alpha_from_mean(er_p1, *er_mu1, er_beta, VertexType::Type1);
            if (er_mu2) er_a2 = er_alpha_from_mean(er_p1, *er_mu2, er_beta, VertexType::Type2);
            if (!er_a1 || !er_a2)
                throw CLI::ValidationError("gen er", "need --alpha1/--alpha2 or --mu1/--mu2");
            const ErParams p{er_p1, *er_a1, *er_a2, er_beta};
            if (er_mu1 || er_mu2)
                std::cout << "resolved alphas: alpha1=" << fmt6(p.alpha1)
                          << " alpha2=" << fmt6(p.alpha2) << "\n";
            RngStream rng(er_common.seed, 0);
            const TypedGraph g = generate_er(er_n, p, rng);
            std::ostringstream desc;
            desc << "p1=" << p.p1 << " alpha1=" << p.alpha1 << " alpha2=" << p.alpha2
                 << " beta=" << p.beta;
            write_graph_file(g, "er", er_common.seed, desc.str(), er_common.out);
            return kExitOk;
        }
        if (gen_cm->parsed()) {
            const DegreeDistribution f1 = parse_dist(cm_f1);
            const DegreeDistribution f2 = parse_dist(cm_f2);
            const double xi2 = cm_xi2 ? *cm_xi2
                                      : cm_balance_xi2(cm_p1, f1.mean(), cm_xi1, f2.mean());
            if (!cm_xi2) std::cout << "balance: xi2=" << fmt6(xi2) << "\n";
            RngStream rng(cm_common.seed, 0);
            const CmResult res = generate_cm(cm_n, cm_p1, f1, f2, cm_xi1, xi2, rng);
            std::ostringstream desc;
            desc << "p1=" << cm_p1 << " f1=" << f1.describe() << " f2=" << f2.describe()
                 << " xi1=" << cm_xi1 << " xi2=" << xi2;
            write_graph_file(res.graph, "cm", cm_common.seed, desc.str(), cm_common.out);
            std::cout << "half-edge labels: L1=" << res.report.labels_own1
                      << " L1'=" << res.report.labels_cross1 << " L2=" << res.report.labels_own2
                      << " L2'=" << res.report.labels_cross2 << "\n";
            std::cout << "erased half-edges: " << res.report.erased_halfedges << " (affecting "
                      << res.report.erased_affected_vertices << " vertices, fraction "
                      << fmt6(static_cast<double>(res.report.erased_affected_vertices) /
                              static_cast<double>(cm_n))
                      << ")\n";
            return kExitOk;
        }
        if (gen_pa->parsed()) {
            const PaParams p{pa_p1, pa_th1, pa_th2};
            RngStream rng(pa_common.seed, 0);
            const TypedGraph g = generate_pa(pa_t, p, rng);
            std::ostringstream desc;
            desc << "t=" << pa_t << " p1=" << p.p1 << " theta1=" << p.theta1
                 << " theta2=" << p.theta2;
            write_graph_file(g, "pa", pa_common.seed, desc.str(), pa_common.out);
            return kExitOk;
        }
        if (an_er->parsed()) {
            if (aer_mu1) aer_a1 = er_alpha_from_mean(aer_p1, *aer_mu1, aer_beta, VertexType::Type1);
            if (aer_mu2) aer_a2 = er_alpha_from_mean(aer_p1, *aer_mu2, aer_beta, VertexType::Type2);
            if (!aer_a1 || !aer_a2)
                throw CLI::ValidationError("analytic er", "need --alpha1/--alpha2 or --mu1/--mu2");
            const ErParams p{aer_p1, *aer_a1, *aer_a2, aer_beta};
            const auto [mu1, mu2] = er_mean_degrees(p);
            std::cout << "alpha1=" << fmt6(p.alpha1) << " alpha2=" << fmt6(p.alpha2) << "\n";
            std::cout << "mu1=" << fmt6(mu1) << " mu2=" << fmt6(mu2) << "\n";
            std::cout << "lambda_c=" << fmt6(er_lambda_c(p)) << "\n";
            return kExitOk;
        }
        if (an_cm->parsed()) {
            const CmMixParams m{acm_xi1, acm_xi2, parse_nu(acm_nu1), parse_nu(acm_nu2)};
            const ExtReal lambda = cm_lambda_c(m);
            std::cout << "lambda_c=" << (lambda.infinite() ? "inf" : fmt6(lambda.value())) << "\n";
            return kExitOk;
        }
        if (an_pa->parsed()) {
            const PaParams p{apa_p1, apa_th1, apa_th2};
            const PaRates r = pa_rates(p);
            const PaExponents e = pa_exponents(p);
            std::cout << "a1=" << fmt6(r.a1) << " a2=" << fmt6(r.a2) << " b1=" << fmt6(r.b1)
                      << " b2=" << fmt6(r.b2) << "\n";
            std::cout << "tau1=" << fmt6(e.tau1) << " gamma1=" << fmt6(e.gamma1)
                      << " tau2=" << fmt6(e.tau2) << " gamma2=" << fmt6(e.gamma2) << "\n";
            const CrossDegreeMatrix m = pa_expected_cross_degrees(p);
            std::cout << "expected cross degrees: n11=" << fmt6(m.n11) << " n12=" << fmt6(m.n12)
                      << " n21=" << fmt6(m.n21) << " n22=" << fmt6(m.n22) << "\n";
            return kExitOk;
        }
        if (analyze->parsed()) {
            return run_analyze(analyze_in, analyze_out, analyze_kmin, analyze_kmax);
        }
        if (export_presets->parsed()) {
            std::filesystem::create_directories(export_dir);
            for (const PresetInfo& info : preset_catalog()) {
                std::ofstream out(export_dir + "/" + info.name + ".json", std::ios::binary);
                if (!out) throw std::runtime_error("cannot write to " + export_dir);
                out << sweep_to_json(preset(info.name)) << "\n";
            }
            std::cout << "wrote " << preset_catalog().size() << " preset configs to " << export_dir
                      << "\n";
            return kExitOk;
        }
        if (experiment->parsed()) {
            if (exp_list) {
                for (const PresetInfo& info : preset_catalog())
                    std::cout << info.name << "\n    " << info.description << "\n";
                return kExitOk;
            }
            if (exp_preset.empty() == exp_config.empty()) {
                std::cerr << "experiment: need exactly one of --preset or --config\n";
                return kExitUsage;
            }
            SweepSpec spec;
            try {
                spec = exp_config.empty() ? preset(exp_preset) : load_sweep_config(exp_config);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return kExitUsage;
            }
            if (exp_seed) spec.master_seed = *exp_seed;
            if (exp_n) spec.size = *exp_n;
            if (exp_t) spec.size = *exp_t;
            if (exp_reps) spec.replicates = *exp_reps;
            if (exp_full_scale) {
                if (spec.model != Model::Pa) {
                    std::cerr << "--full-scale applies to PA presets only\n";
                    return kExitUsage;
                }
                spec.size = 1000000000ull;
            }
            std::filesystem::create_directories(exp_out);
            const SweepResult result = run_sweep(spec, exp_jobs);
            const auto written = write_artifacts(result, exp_out);
            for (const std::string& path : written) std::cout << "wrote " << path << "\n";
            std::size_t infeasible = 0;
            for (const SweepRow& row : result.rows) infeasible += !row.feasible;
            if (infeasible > 0)
                std::cerr << "warning: " << infeasible
                          << " infeasible grid point(s) skipped (see flags column)\n";
            // print the table for quick inspection next to the analytic columns
            std::cout << sweep_csv(result);
            return kExitOk;
        }
    } catch (const InfeasibleParams& e) {
        std::cerr << "infeasible parameters: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
