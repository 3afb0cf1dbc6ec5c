#include "twotype/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "twotype/analysis.hpp"
#include "twotype/analytic.hpp"
#include "twotype/errors.hpp"
#include "twotype/generators.hpp"
#include "twotype/rng.hpp"
#include "twotype/version.hpp"

namespace twotype {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Table 1 of simulated preferential-attachment instances: (p1, theta1, theta2).
struct PaCase {
    double p1, theta1, theta2;
    const char* label;
};
constexpr PaCase kPaCases[5] = {
    {0.5, 0.8, 0.8, "I"},  {0.5, 0.2, 0.2, "II"}, {0.5, 0.8, 0.2, "III"},
    {0.1, 0.8, 0.2, "IV"}, {0.2, 0.2, 0.2, "V"},
};

bool has_rule(const SweepSpec& s, DerivedRule r) {
    return std::find(s.derived.begin(), s.derived.end(), r) != s.derived.end();
}

// Per grid point: the concrete generator parameters plus the analytic cells.
struct ResolvedPoint {
    bool feasible = true;
    std::string note;
    ErParams er{0.5, 0, 0, 0};
    double cm_p1 = 0.5, cm_xi1 = 1.0, cm_xi2 = 1.0;
    DistSpec cm_f1, cm_f2;
    PaParams pa{0.5, 0.5, 0.5};
    std::map<std::string, double> values; // point-level (analytic) cells
};

double lookup(const std::map<std::string, double>& ps, const std::string& key) {
    const auto it = ps.find(key);
    if (it == ps.end())
        throw std::invalid_argument("sweep spec: required parameter '" + key + "' is neither fixed nor swept");
    return it->second;
}

ResolvedPoint resolve_point(const SweepSpec& spec, double x) {
    std::map<std::string, double> ps = spec.fixed;
    ps[spec.swept] = x;
    ResolvedPoint r;
    switch (spec.model) {
        case Model::Er: {
            const double p1 = lookup(ps, "p1");
            const double beta = lookup(ps, "beta");
            double a1 = 0, a2 = 0;
            if (has_rule(spec, DerivedRule::ErAlphasFromMeans)) {
                try {
                    a1 = er_alpha_from_mean(p1, lookup(ps, "mu1"), beta, VertexType::Type1);
                    a2 = er_alpha_from_mean(p1, lookup(ps, "mu2"), beta, VertexType::Type2);
                } catch (const InfeasibleParams& e) {
                    r.feasible = false;
                    r.note = e.what();
                    return r;
                }
            } else {
                a1 = lookup(ps, "alpha1");
                a2 = lookup(ps, "alpha2");
            }
            r.er = ErParams{p1, a1, a2, beta};
            r.values["alpha1"] = a1;
            r.values["alpha2"] = a2;
            r.values["lambda_c"] = er_lambda_c(r.er);
            return r;
        }
        case Model::Cm: {
            r.cm_p1 = lookup(ps, "p1");
            r.cm_xi1 = ps.count("xi1") ? lookup(ps, "xi1") : 1.0 - lookup(ps, "one_minus_xi1");
            r.cm_f1 = spec.f1;
            r.cm_f2 = spec.f2;
            if (ps.count("mu1")) r.cm_f1.mean = lookup(ps, "mu1");
            if (ps.count("mu2")) r.cm_f2.mean = lookup(ps, "mu2");
            if (has_rule(spec, DerivedRule::CmBalanceXi2)) {
                try {
                    r.cm_xi2 = cm_balance_xi2(r.cm_p1, r.cm_f1.mean, r.cm_xi1, r.cm_f2.mean);
                } catch (const InfeasibleParams& e) {
                    r.feasible = false;
                    r.note = e.what();
                    return r;
                }
            } else {
                r.cm_xi2 = lookup(ps, "xi2");
            }
            const ExtReal nu1 = r.cm_f1.build().size_biased_mean();
            const ExtReal nu2 = r.cm_f2.build().size_biased_mean();
            const ExtReal lambda = cm_lambda_c(CmMixParams{r.cm_xi1, r.cm_xi2, nu1, nu2});
            r.values["xi1"] = r.cm_xi1;
            r.values["xi2"] = r.cm_xi2;
            r.values["nu1"] = nu1.value_or_inf();
            r.values["nu2"] = nu2.value_or_inf();
            r.values["lambda_c"] = lambda.value_or_inf();
            return r;
        }
        case Model::Pa: {
            if (has_rule(spec, DerivedRule::PaCaseParams)) {
                const double c = lookup(ps, "case");
                const int ci = static_cast<int>(c);
                if (ci < 1 || ci > 5 || static_cast<double>(ci) != c)
                    throw std::invalid_argument("sweep spec: 'case' must be an integer in 1..5");
                r.pa = PaParams{kPaCases[ci - 1].p1, kPaCases[ci - 1].theta1, kPaCases[ci - 1].theta2};
            } else {
                r.pa = PaParams{lookup(ps, "p1"), lookup(ps, "theta1"), lookup(ps, "theta2")};
            }
            r.values["p1"] = r.pa.p1;
            r.values["theta1"] = r.pa.theta1;
            r.values["theta2"] = r.pa.theta2;
            const PaExponents e = pa_exponents(r.pa);
            r.values["gamma1"] = e.gamma1;
            r.values["gamma2"] = e.gamma2;
            const CrossDegreeMatrix m = pa_expected_cross_degrees(r.pa);
            r.values["n11_pred"] = m.n11;
            r.values["n12_pred"] = m.n12;
            r.values["n21_pred"] = m.n21;
            r.values["n22_pred"] = m.n22;
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> point_columns(const SweepSpec& spec, Metric m) {
    switch (m) {
        case Metric::LambdaC:
            if (spec.model == Model::Er) return {"alpha1", "alpha2", "lambda_c"};
            return {"xi1", "xi2", "nu1", "nu2", "lambda_c"};
        case Metric::Exponents: return {"gamma1", "gamma2"};
        case Metric::CrossDegrees: return {"n11_pred", "n12_pred", "n21_pred", "n22_pred"};
        default: return {};
    }
}

std::vector<std::string> replicate_columns(Metric m) {
    switch (m) {
        case Metric::Components: return {"largest_frac", "second_frac", "third_frac"};
        case Metric::Erasure: return {"erased_vertex_frac"};
        case Metric::Exponents: return {"gamma1_hat", "gamma1_r2", "gamma2_hat", "gamma2_r2"};
        case Metric::CrossDegrees:
            return {"n11", "n12", "n21", "n22", "corr1", "corr2"};
        case Metric::PairExponents:
            return {"gamma11_hat", "gamma12_hat", "gamma21_hat", "gamma22_hat"};
        default: return {};
    }
}

std::vector<std::string> pa_base_columns() { return {"p1", "theta1", "theta2"}; }

std::optional<double> try_fit_gamma(const CcdfTable& ccdf) {
    const std::uint64_t k_max = default_fit_kmax(ccdf);
    if (k_max <= kDefaultFitKmin) return std::nullopt;
    try {
        return fit_tail_exponent(ccdf, kDefaultFitKmin, k_max).gamma_hat;
    } catch (const InsufficientData&) {
        return std::nullopt;
    }
}

std::optional<double> try_fit_r2(const CcdfTable& ccdf) {
    const std::uint64_t k_max = default_fit_kmax(ccdf);
    if (k_max <= kDefaultFitKmin) return std::nullopt;
    try {
        return fit_tail_exponent(ccdf, kDefaultFitKmin, k_max).r_squared;
    } catch (const InsufficientData&) {
        return std::nullopt;
    }
}

// One replicate of one grid point; returns cells aligned with rep_cols.
std::map<std::string, std::optional<double>> run_replicate(const SweepSpec& spec,
                                                           const ResolvedPoint& rp,
                                                           std::uint64_t stream_index) {
    RngStream rng(spec.master_seed, stream_index);
    std::map<std::string, std::optional<double>> out;
    switch (spec.model) {
        case Model::Er:
        case Model::Cm: {
            TypedGraph g;
            if (spec.model == Model::Er) {
                g = generate_er(spec.size, rp.er, rng);
            } else {
                CmResult res = generate_cm(spec.size, rp.cm_p1, rp.cm_f1.build(), rp.cm_f2.build(),
                                           rp.cm_xi1, rp.cm_xi2, rng);
                g = std::move(res.graph);
                out["erased_vertex_frac"] = static_cast<double>(res.report.erased_affected_vertices) /
                                            static_cast<double>(spec.size);
            }
            const auto sizes = top_k_component_sizes(g, 3);
            const double n = static_cast<double>(spec.size);
            out["largest_frac"] = static_cast<double>(sizes[0]) / n;
            out["second_frac"] = static_cast<double>(sizes[1]) / n;
            out["third_frac"] = static_cast<double>(sizes[2]) / n;
            return out;
        }
        case Model::Pa: {
            const TypedGraph g = generate_pa(spec.size, rp.pa, rng);
            const DegreeReport rep = degree_report(g);
            out["gamma1_hat"] = try_fit_gamma(rep.ccdf[0]);
            out["gamma1_r2"] = try_fit_r2(rep.ccdf[0]);
            out["gamma2_hat"] = try_fit_gamma(rep.ccdf[1]);
            out["gamma2_r2"] = try_fit_r2(rep.ccdf[1]);
            out["n11"] = rep.cross_mean[0][0];
            out["n12"] = rep.cross_mean[0][1];
            out["n21"] = rep.cross_mean[1][0];
            out["n22"] = rep.cross_mean[1][1];
            out["corr1"] = rep.cross_correlation[0];
            out["corr2"] = rep.cross_correlation[1];
            out["gamma11_hat"] = try_fit_gamma(rep.pair_ccdf[0][0]);
            out["gamma12_hat"] = try_fit_gamma(rep.pair_ccdf[0][1]);
            out["gamma21_hat"] = try_fit_gamma(rep.pair_ccdf[1][0]);
            out["gamma22_hat"] = try_fit_gamma(rep.pair_ccdf[1][1]);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

void append_curves(const SweepSpec& spec, const ResolvedPoint& rp, SweepResult& result) {
    const bool want_ccdf = std::find(result.spec.metrics.begin(), result.spec.metrics.end(),
                                     Metric::Ccdf) != result.spec.metrics.end();
    const bool want_scatter = std::find(result.spec.metrics.begin(), result.spec.metrics.end(),
                                        Metric::Scatter) != result.spec.metrics.end();
    if (!want_ccdf && !want_scatter) return;
    RngStream rng(spec.master_seed, 0);
    const TypedGraph g = generate_pa(spec.size, rp.pa, rng);
    if (want_ccdf) {
        const DegreeReport rep = degree_report(g);
        for (int i = 0; i < 2; ++i) {
            CurveSeries s;
            s.name = "ccdf_type" + std::to_string(i + 1);
            for (const CcdfEntry& e : rep.ccdf[i])
                s.points.emplace_back(static_cast<double>(e.k), e.fraction_ge);
            result.curves.push_back(std::move(s));
        }
    }
    if (want_scatter) {
        const VertexDegrees deg = total_and_per_type_degrees(g);
        for (int i = 0; i < 2; ++i) {
            std::vector<std::pair<double, double>> pts;
            for (std::uint64_t v = 0; v < g.n; ++v)
                if (type_index(g.types[v]) == i)
                    pts.emplace_back(static_cast<double>(deg.to_type1[v]),
                                     static_cast<double>(deg.to_type2[v]));
            // Deterministic subsample: every stride-th vertex, at most ~4000.
            const std::size_t stride = std::max<std::size_t>(1, pts.size() / 4000);
            CurveSeries s;
            s.name = "scatter_type" + std::to_string(i + 1);
            for (std::size_t j = 0; j < pts.size(); j += stride) s.points.push_back(pts[j]);
            result.curves.push_back(std::move(s));
        }
    }
}

bool metric_allowed(Model model, Metric m) {
    switch (m) {
        case Metric::Components:
        case Metric::LambdaC: return model != Model::Pa;
        case Metric::Erasure: return model == Model::Cm;
        default: return model == Model::Pa;
    }
}

} // namespace

std::vector<Metric> SweepSpec::effective_metrics() const {
    if (!metrics.empty()) return metrics;
    switch (model) {
        case Model::Er: return {Metric::LambdaC, Metric::Components};
        case Model::Cm: return {Metric::LambdaC, Metric::Components, Metric::Erasure};
        case Model::Pa: return {Metric::Exponents, Metric::CrossDegrees, Metric::PairExponents};
    }
    throw std::logic_error("unreachable");
}

void SweepSpec::validate() const {
    if (grid.empty()) throw std::invalid_argument("sweep spec: grid must be non-empty");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::invalid_argument("sweep spec: grid must be strictly increasing");
    if (replicates < 1) throw std::invalid_argument("sweep spec: replicates must be >= 1");
    if (size < 1) throw std::invalid_argument("sweep spec: size must be >= 1");
    if (swept.empty()) throw std::invalid_argument("sweep spec: swept parameter name must be set");
    for (Metric m : effective_metrics()) {
        if (!metric_allowed(model, m))
            throw std::invalid_argument(std::string("sweep spec: metric '") + metric_name(m) +
                                        "' does not apply to model '" + model_name(model) + "'");
        if ((m == Metric::Ccdf || m == Metric::Scatter) && grid.size() != 1)
            throw std::invalid_argument(std::string("sweep spec: metric '") + metric_name(m) +
                                        "' requires a single-point grid");
    }
    // Fail early on missing parameters rather than midway through a run.
    resolve_point(*this, grid.front());
}

SweepResult run_sweep(const SweepSpec& spec, unsigned jobs) {
    spec.validate();
    SweepResult result;
    result.spec = spec;
    result.spec.metrics = spec.effective_metrics();
    const auto& metrics = result.spec.metrics;

    // Column layout: base point cells, then per-metric point cells, then
    // mean/sd aggregates of the replicate cells, in catalog metric order.
    std::vector<std::string> point_cols;
    if (spec.model == Model::Pa) point_cols = pa_base_columns();
    for (Metric m : metrics)
        for (const std::string& c : point_columns(spec, m)) point_cols.push_back(c);
    std::vector<std::string> rep_cols;
    for (Metric m : metrics)
        for (const std::string& c : replicate_columns(m)) rep_cols.push_back(c);

    result.columns = point_cols;
    for (const std::string& c : rep_cols) {
        result.columns.push_back(c + "_mean");
        result.columns.push_back(c + "_sd");
    }

    std::vector<ResolvedPoint> points;
    points.reserve(spec.grid.size());
    for (double x : spec.grid) points.push_back(resolve_point(spec, x));

    // Work items: (point, replicate) for feasible points. One RngStream per
    // replicate keyed by point*replicates + rep, so results are independent
    // of the execution order.
    struct Task {
        std::size_t point;
        std::uint64_t rep;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].feasible)
            for (std::uint64_t r = 0; r < spec.replicates; ++r) tasks.push_back({i, r});

    std::vector<std::map<std::string, std::optional<double>>> rep_results(tasks.size());
    const unsigned workers = std::max(1u, jobs);
    if (workers == 1 || tasks.size() <= 1) {
        for (std::size_t ti = 0; ti < tasks.size(); ++ti)
            rep_results[ti] = run_replicate(spec, points[tasks[ti].point],
                                            tasks[ti].point * spec.replicates + tasks[ti].rep);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&]() {
            for (;;) {
                const std::size_t ti = next.fetch_add(1);
                if (ti >= tasks.size()) return;
                try {
                    rep_results[ti] = run_replicate(spec, points[tasks[ti].point],
                                                    tasks[ti].point * spec.replicates + tasks[ti].rep);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    // Aggregate, task list is ordered by (point, rep).
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        SweepRow row;
        row.x = spec.grid[i];
        row.feasible = points[i].feasible;
        std::vector<std::string> notes;
        if (!points[i].feasible) notes.push_back("infeasible: " + points[i].note);
        for (const std::string& c : point_cols) {
            if (!points[i].feasible) {
                row.cells.emplace_back(std::nullopt);
                continue;
            }
            const auto it = points[i].values.find(c);
            row.cells.emplace_back(it == points[i].values.end()
                                       ? std::optional<double>{}
                                       : std::optional<double>{it->second});
        }
        std::vector<const std::map<std::string, std::optional<double>>*> reps;
        if (points[i].feasible)
            for (std::uint64_t r = 0; r < spec.replicates; ++r) reps.push_back(&rep_results[cursor++]);
        for (const std::string& c : rep_cols) {
            double sum = 0.0, sum2 = 0.0;
            std::uint64_t count = 0;
            for (const auto* m : reps) {
                const auto it = m->find(c);
                if (it == m->end() || !it->second) continue;
                sum += *it->second;
                sum2 += *it->second * *it->second;
                ++count;
            }
            if (count == 0) {
                row.cells.emplace_back(std::nullopt);
                row.cells.emplace_back(std::nullopt);
                if (points[i].feasible) notes.push_back("unavailable: " + c);
                continue;
            }
            const double mean = sum / static_cast<double>(count);
            double sd = 0.0;
            if (count > 1) {
                const double ss = sum2 - sum * sum / static_cast<double>(count);
                sd = std::sqrt(std::max(0.0, ss) / static_cast<double>(count - 1));
            }
            row.cells.emplace_back(mean);
            row.cells.emplace_back(sd);
            if (count < reps.size())
                notes.push_back("partial(" + std::to_string(count) + "/" +
                                std::to_string(reps.size()) + "): " + c);
        }
        std::string flags;
        for (std::size_t k = 0; k < notes.size(); ++k) {
            if (k) flags += "; ";
            flags += notes[k];
        }
        row.flags = flags;
        result.rows.push_back(std::move(row));
    }

    if (spec.grid.size() == 1 && points[0].feasible && spec.model == Model::Pa)
        append_curves(spec, points[0], result);
    return result;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

const char* model_name(Model m) {
    switch (m) {
        case Model::Er: return "er";
        case Model::Cm: return "cm";
        case Model::Pa: return "pa";
    }
    return "?";
}

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::Components: return "components";
        case Metric::LambdaC: return "lambda_c";
        case Metric::Erasure: return "erasure";
        case Metric::Exponents: return "exponents";
        case Metric::CrossDegrees: return "cross_degrees";
        case Metric::PairExponents: return "pair_exponents";
        case Metric::Ccdf: return "ccdf";
        case Metric::Scatter: return "scatter";
    }
    return "?";
}

namespace {

Metric metric_from_name(const std::string& s) {
    for (Metric m : {Metric::Components, Metric::LambdaC, Metric::Erasure, Metric::Exponents,
                     Metric::CrossDegrees, Metric::PairExponents, Metric::Ccdf, Metric::Scatter})
        if (s == metric_name(m)) return m;
    throw std::invalid_argument("unknown metric '" + s + "'");
}

const char* rule_name(DerivedRule r) {
    switch (r) {
        case DerivedRule::ErAlphasFromMeans: return "er_alphas_from_means";
        case DerivedRule::CmBalanceXi2: return "cm_xi2_from_balance";
        case DerivedRule::PaCaseParams: return "pa_case_params";
    }
    return "?";
}

DerivedRule rule_from_name(const std::string& s) {
    for (DerivedRule r : {DerivedRule::ErAlphasFromMeans, DerivedRule::CmBalanceXi2,
                          DerivedRule::PaCaseParams})
        if (s == rule_name(r)) return r;
    throw std::invalid_argument("unknown derived rule '" + s + "'");
}

std::string csv_header_comment(const SweepSpec& spec) {
    return "# twotype " + std::string(kToolVersion) + " spec=" + sweep_to_json(spec);
}

} // namespace

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    os << result.spec.swept;
    for (const std::string& c : result.columns) os << "," << c;
    os << ",flags\n";
    for (const SweepRow& row : result.rows) {
        os << format_double(row.x);
        for (const auto& cell : row.cells) os << "," << (cell ? format_double(*cell) : "");
        os << "," << row.flags << "\n";
    }
    return os.str();
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << sweep_csv(result);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::string> metric_columns(const SweepSpec& spec, Metric m) {
    std::vector<std::string> cols;
    if (spec.model == Model::Pa)
        for (const std::string& c : pa_base_columns()) cols.push_back(c);
    for (const std::string& c : point_columns(spec, m)) cols.push_back(c);
    for (const std::string& c : replicate_columns(m)) {
        cols.push_back(c + "_mean");
        cols.push_back(c + "_sd");
    }
    return cols;
}

std::string sweep_metric_csv(const SweepResult& result, Metric m) {
    const std::vector<std::string> cols = metric_columns(result.spec, m);
    std::vector<std::size_t> idx;
    for (const std::string& c : cols) {
        const auto it = std::find(result.columns.begin(), result.columns.end(), c);
        if (it != result.columns.end())
            idx.push_back(static_cast<std::size_t>(it - result.columns.begin()));
    }
    std::ostringstream os;
    os << csv_header_comment(result.spec) << "\n";
    os << result.spec.swept;
    for (std::size_t i : idx) os << "," << result.columns[i];
    os << ",flags\n";
    for (const SweepRow& row : result.rows) {
        os << format_double(row.x);
        for (std::size_t i : idx) os << "," << (row.cells[i] ? format_double(*row.cells[i]) : "");
        os << "," << row.flags << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

namespace {

struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> pts;
};

struct PlotSpec {
    std::string title, xlabel, ylabel, comment;
    bool logx = false, logy = false, scatter = false;
    std::vector<PlotSeries> series;
    std::vector<std::string> annotations;
};

constexpr const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#ff7f0e", "#9467bd", "#8c564b"};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string render_svg(const PlotSpec& plot) {
    constexpr double W = 640, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
    auto usable = [&](double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y)) return false;
        if (plot.logx && !(x > 0)) return false;
        if (plot.logy && !(y > 0)) return false;
        return true;
    };
    for (const PlotSeries& s : plot.series)
        for (const auto& [x, y] : s.pts) {
            if (!usable(x, y)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmin <= xmax)) throw std::invalid_argument("plot has no finite data points");
    auto tx = [&](double v) { return plot.logx ? std::log10(v) : v; };
    auto ty = [&](double v) { return plot.logy ? std::log10(v) : v; };
    double x0 = tx(xmin), x1 = tx(xmax), y0 = ty(ymin), y1 = ty(ymax);
    if (x1 - x0 < 1e-12) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if (y1 - y0 < 1e-12) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    auto mapx = [&](double v) { return ml + (tx(v) - x0) / (x1 - x0) * (W - ml - mr); };
    auto mapy = [&](double v) { return H - mb - (ty(v) - y0) / (y1 - y0) * (H - mt - mb); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    if (!plot.comment.empty()) os << "<!-- " << plot.comment << " -->\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
       << plot.title << "</text>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
       << H - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
       << "\" stroke=\"black\"/>\n";
    // ticks: 5 per axis in transformed coordinates
    for (int i = 0; i <= 4; ++i) {
        const double fx = x0 + (x1 - x0) * i / 4.0;
        const double fy = y0 + (y1 - y0) * i / 4.0;
        const double vx = plot.logx ? std::pow(10.0, fx) : fx;
        const double vy = plot.logy ? std::pow(10.0, fy) : fy;
        const double pxx = ml + (fx - x0) / (x1 - x0) * (W - ml - mr);
        const double pyy = H - mb - (fy - y0) / (y1 - y0) * (H - mt - mb);
        os << "<line x1=\"" << px(pxx) << "\" y1=\"" << H - mb << "\" x2=\"" << px(pxx)
           << "\" y2=\"" << H - mb + 4 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << px(pxx) << "\" y=\"" << H - mb + 18
           << "\" text-anchor=\"middle\" font-size=\"10\">" << format_double(vx) << "</text>\n";
        os << "<line x1=\"" << ml - 4 << "\" y1=\"" << px(pyy) << "\" x2=\"" << ml << "\" y2=\""
           << px(pyy) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << px(pyy + 3)
           << "\" text-anchor=\"end\" font-size=\"10\">" << format_double(vy) << "</text>\n";
    }
    os << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 12
       << "\" text-anchor=\"middle\" font-size=\"12\">" << plot.xlabel << "</text>\n";
    os << "<text x=\"16\" y=\"" << (mt + H - mb) / 2
       << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
       << (mt + H - mb) / 2 << ")\">" << plot.ylabel << "</text>\n";

    for (std::size_t si = 0; si < plot.series.size(); ++si) {
        const PlotSeries& s = plot.series[si];
        const char* color = kPalette[si % 6];
        if (plot.scatter) {
            for (const auto& [x, y] : s.pts) {
                if (!usable(x, y)) continue;
                os << "<circle cx=\"" << px(mapx(x)) << "\" cy=\"" << px(mapy(y))
                   << "\" r=\"2\" fill=\"" << color << "\" fill-opacity=\"0.5\"/>\n";
            }
        } else {
            // split the polyline at unusable points
            std::vector<std::string> segments;
            std::string current;
            for (const auto& [x, y] : s.pts) {
                if (!usable(x, y)) {
                    if (!current.empty()) segments.push_back(current);
                    current.clear();
                    continue;
                }
                current += px(mapx(x)) + "," + px(mapy(y)) + " ";
            }
            if (!current.empty()) segments.push_back(current);
            for (const std::string& seg : segments)
                os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
                   << seg << "\"/>\n";
        }
        os << "<text x=\"" << W - mr - 6 << "\" y=\"" << mt + 16 + 14 * static_cast<double>(si)
           << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << color << "\">" << s.name
           << "</text>\n";
    }
    for (std::size_t ai = 0; ai < plot.annotations.size(); ++ai)
        os << "<text x=\"" << ml + 10 << "\" y=\"" << mt + 16 + 14 * static_cast<double>(ai)
           << "\" font-size=\"11\">" << plot.annotations[ai] << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::optional<std::size_t> column_index(const SweepResult& r, const std::string& name) {
    const auto it = std::find(r.columns.begin(), r.columns.end(), name);
    if (it == r.columns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - r.columns.begin());
}

PlotSeries column_series(const SweepResult& r, const std::string& col, const std::string& label) {
    PlotSeries s;
    s.name = label;
    const auto idx = column_index(r, col);
    if (!idx) return s;
    for (const SweepRow& row : r.rows) {
        // infinities stay in the CSV; the plot holds finite values only
        if (!row.cells[*idx] || !std::isfinite(*row.cells[*idx])) continue;
        s.pts.emplace_back(row.x, *row.cells[*idx]);
    }
    return s;
}

PlotSpec build_line_plot(const SweepResult& r, Metric m) {
    PlotSpec plot;
    plot.title = r.spec.name + ": " + metric_name(m);
    plot.xlabel = r.spec.swept;
    plot.ylabel = metric_name(m);
    plot.comment = csv_header_comment(r.spec).substr(2);
    switch (m) {
        case Metric::Components:
            for (const char* c : {"largest_frac_mean", "second_frac_mean", "third_frac_mean"}) {
                PlotSeries s = column_series(r, c, c);
                if (!s.pts.empty()) plot.series.push_back(std::move(s));
            }
            break;
        case Metric::LambdaC: {
            plot.series.push_back(column_series(r, "lambda_c", "lambda_c"));
            break;
        }
        case Metric::Erasure:
            plot.series.push_back(column_series(r, "erased_vertex_frac_mean", "erased_vertex_frac"));
            break;
        case Metric::Exponents:
            for (const char* c : {"gamma1_hat_mean", "gamma1", "gamma2_hat_mean", "gamma2"}) {
                PlotSeries s = column_series(r, c, c);
                if (!s.pts.empty()) plot.series.push_back(std::move(s));
            }
            break;
        case Metric::CrossDegrees:
            for (const char* c : {"n11_mean", "n11_pred", "n12_mean", "n12_pred", "n21_mean",
                                  "n21_pred", "n22_mean", "n22_pred"}) {
                PlotSeries s = column_series(r, c, c);
                if (!s.pts.empty()) plot.series.push_back(std::move(s));
            }
            break;
        case Metric::PairExponents:
            for (const char* c : {"gamma11_hat_mean", "gamma12_hat_mean", "gamma21_hat_mean",
                                  "gamma22_hat_mean"}) {
                PlotSeries s = column_series(r, c, c);
                if (!s.pts.empty()) plot.series.push_back(std::move(s));
            }
            break;
        default:
            break;
    }
    return plot;
}

PlotSpec build_loglog_plot(const SweepResult& r) {
    PlotSpec plot;
    plot.title = r.spec.name + ": degree CCDF";
    plot.xlabel = "k";
    plot.ylabel = "fraction of vertices with degree >= k";
    plot.logx = plot.logy = true;
    plot.comment = csv_header_comment(r.spec).substr(2);
    for (const CurveSeries& c : r.curves) {
        if (c.name.rfind("ccdf", 0) != 0) continue;
        PlotSeries s;
        s.name = c.name;
        s.pts = c.points;
        plot.series.push_back(std::move(s));
        // annotate the fitted slope over the default window
        CcdfTable table;
        for (const auto& [k, f] : c.points)
            table.push_back({static_cast<std::uint64_t>(k), 0, f});
        // counts unknown here; fit over the available k range above kDefaultFitKmin
        if (table.size() >= 5) {
            try {
                const ExponentFit fit =
                    fit_tail_exponent(table, kDefaultFitKmin, static_cast<std::uint64_t>(
                                                                  table.back().k));
                char buf[96];
                std::snprintf(buf, sizeof(buf), "%s slope=-%.2f", c.name.c_str(), fit.gamma_hat);
                plot.annotations.push_back(buf);
            } catch (const InsufficientData&) {
            }
        }
    }
    if (plot.series.empty()) throw std::invalid_argument("result has no CCDF curves to plot");
    return plot;
}

PlotSpec build_scatter_plot(const SweepResult& r) {
    PlotSpec plot;
    plot.title = r.spec.name + ": degree split per type";
    plot.xlabel = "degree to type 1";
    plot.ylabel = "degree to type 2";
    plot.scatter = true;
    plot.comment = csv_header_comment(r.spec).substr(2);
    for (const CurveSeries& c : r.curves) {
        if (c.name.rfind("scatter", 0) != 0) continue;
        PlotSeries s;
        s.name = c.name;
        s.pts = c.points;
        plot.series.push_back(std::move(s));
    }
    if (plot.series.empty()) throw std::invalid_argument("result has no scatter series to plot");
    return plot;
}

} // namespace

std::string sweep_plot_svg(const SweepResult& result, PlotKind kind) {
    if (result.rows.empty()) throw std::invalid_argument("cannot plot an empty result");
    switch (kind) {
        case PlotKind::Line: {
            for (Metric m : result.spec.effective_metrics()) {
                PlotSpec plot = build_line_plot(result, m);
                if (!plot.series.empty() && !plot.series[0].pts.empty()) return render_svg(plot);
            }
            throw std::invalid_argument("result has no plottable scalar series");
        }
        case PlotKind::LogLog: return render_svg(build_loglog_plot(result));
        case PlotKind::Scatter: return render_svg(build_scatter_plot(result));
    }
    throw std::logic_error("unreachable");
}

void emit_plot(const SweepResult& result, PlotKind kind, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << sweep_plot_svg(result, kind);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::string> write_artifacts(const SweepResult& result, const std::string& out_dir) {
    std::vector<std::string> written;
    std::string base = result.spec.name;
    for (char& c : base)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) c = '_';
    for (Metric m : result.spec.effective_metrics()) {
        const std::string stem = out_dir + "/" + base + "." + metric_name(m);
        if (m == Metric::Ccdf || m == Metric::Scatter) {
            // curve metrics: CSV of the curve points plus the corresponding plot
            std::ostringstream os;
            os << csv_header_comment(result.spec) << "\n";
            os << "series,x,y\n";
            for (const CurveSeries& c : result.curves) {
                const bool is_ccdf = c.name.rfind("ccdf", 0) == 0;
                if ((m == Metric::Ccdf) != is_ccdf) continue;
                for (const auto& [x, y] : c.points)
                    os << c.name << "," << format_double(x) << "," << format_double(y) << "\n";
            }
            std::ofstream out(stem + ".csv", std::ios::binary);
            if (!out) throw std::runtime_error("cannot open for writing: " + stem + ".csv");
            out << os.str();
            written.push_back(stem + ".csv");
            const PlotKind kind = m == Metric::Ccdf ? PlotKind::LogLog : PlotKind::Scatter;
            emit_plot(result, kind, stem + ".svg");
            written.push_back(stem + ".svg");
            continue;
        }
        std::ofstream out(stem + ".csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing: " + stem + ".csv");
        out << sweep_metric_csv(result, m);
        written.push_back(stem + ".csv");
        PlotSpec plot = build_line_plot(result, m);
        bool has_points = false;
        for (const PlotSeries& s : plot.series) has_points = has_points || !s.pts.empty();
        if (has_points) {
            std::ofstream svg(stem + ".svg", std::ios::binary);
            if (!svg) throw std::runtime_error("cannot open for writing: " + stem + ".svg");
            svg << render_svg(plot);
            written.push_back(stem + ".svg");
        }
    }
    return written;
}

// ---------------------------------------------------------------------------
// JSON config
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json dist_to_json(const DistSpec& d) {
    nlohmann::ordered_json j;
    j["kind"] = d.kind == DistSpec::Kind::Poisson ? "poisson" : "yule_simon";
    j["mean"] = d.mean;
    return j;
}

DistSpec dist_from_json(const nlohmann::json& j) {
    DistSpec d;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "poisson") d.kind = DistSpec::Kind::Poisson;
    else if (kind == "yule_simon") d.kind = DistSpec::Kind::YuleSimon;
    else throw std::invalid_argument("unknown distribution kind '" + kind + "'");
    d.mean = j.at("mean").get<double>();
    return d;
}

} // namespace

std::string sweep_to_json(const SweepSpec& spec) {
    nlohmann::ordered_json j;
    j["name"] = spec.name;
    j["model"] = model_name(spec.model);
    j["size"] = spec.size;
    j["replicates"] = spec.replicates;
    j["master_seed"] = spec.master_seed;
    j["sweep"] = {{"param", spec.swept}, {"grid", spec.grid}};
    nlohmann::ordered_json fixed = nlohmann::ordered_json::object();
    for (const auto& [k, v] : spec.fixed) fixed[k] = v;
    j["fixed"] = fixed;
    std::vector<std::string> rules;
    for (DerivedRule r : spec.derived) rules.emplace_back(rule_name(r));
    j["derived"] = rules;
    if (spec.model == Model::Cm) {
        j["f1"] = dist_to_json(spec.f1);
        j["f2"] = dist_to_json(spec.f2);
    }
    std::vector<std::string> ms;
    for (Metric m : spec.effective_metrics()) ms.emplace_back(metric_name(m));
    j["metrics"] = ms;
    return j.dump();
}

SweepSpec sweep_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("sweep config is not valid JSON: ") + e.what());
    }
    SweepSpec spec;
    spec.name = j.value("name", std::string("custom"));
    const std::string model = j.at("model").get<std::string>();
    if (model == "er") spec.model = Model::Er;
    else if (model == "cm") spec.model = Model::Cm;
    else if (model == "pa") spec.model = Model::Pa;
    else throw std::invalid_argument("unknown model '" + model + "'");
    spec.size = j.at("size").get<std::uint64_t>();
    spec.replicates = j.at("replicates").get<std::uint64_t>();
    spec.master_seed = j.at("master_seed").get<std::uint64_t>();
    spec.swept = j.at("sweep").at("param").get<std::string>();
    spec.grid = j.at("sweep").at("grid").get<std::vector<double>>();
    if (j.contains("fixed"))
        for (const auto& [k, v] : j.at("fixed").items()) spec.fixed[k] = v.get<double>();
    if (j.contains("derived"))
        for (const auto& r : j.at("derived")) spec.derived.push_back(rule_from_name(r.get<std::string>()));
    if (spec.model == Model::Cm) {
        spec.f1 = dist_from_json(j.at("f1"));
        spec.f2 = dist_from_json(j.at("f2"));
    }
    if (j.contains("metrics"))
        for (const auto& m : j.at("metrics")) spec.metrics.push_back(metric_from_name(m.get<std::string>()));
    spec.validate();
    return spec;
}

SweepSpec load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sweep config: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return sweep_from_json(os.str());
}

// ---------------------------------------------------------------------------
// Preset catalog
// ---------------------------------------------------------------------------

namespace {

std::vector<double> arithmetic_grid(double start, double step, std::size_t count) {
    std::vector<double> g;
    g.reserve(count);
    // preset steps are whole hundredths; snapping avoids 0.15000000000000002
    // style grid values in emitted files
    for (std::size_t i = 0; i < count; ++i)
        g.push_back(std::round((start + step * static_cast<double>(i)) * 1000.0) / 1000.0);
    return g;
}

SweepSpec er_means_preset(std::string name, double p1, double mu1, double mu2,
                          std::vector<double> beta_grid) {
    SweepSpec s;
    s.name = std::move(name);
    s.model = Model::Er;
    s.size = 10000;
    s.replicates = 100;
    s.swept = "beta";
    s.grid = std::move(beta_grid);
    s.fixed = {{"p1", p1}, {"mu1", mu1}, {"mu2", mu2}};
    s.derived = {DerivedRule::ErAlphasFromMeans};
    return s;
}

SweepSpec er_p1_preset(std::string name, double alpha1, double alpha2, double beta) {
    SweepSpec s;
    s.name = std::move(name);
    s.model = Model::Er;
    s.size = 10000;
    s.replicates = 100;
    s.swept = "p1";
    s.grid = arithmetic_grid(0.0, 0.05, 21);
    s.fixed = {{"alpha1", alpha1}, {"alpha2", alpha2}, {"beta", beta}};
    return s;
}

SweepSpec cm_preset(std::string name, double p1, DistSpec f1, DistSpec f2) {
    SweepSpec s;
    s.name = std::move(name);
    s.model = Model::Cm;
    s.size = 10000;
    s.replicates = 100;
    s.swept = "one_minus_xi1";
    s.grid = arithmetic_grid(0.0, 0.05, 21);
    s.fixed = {{"p1", p1}};
    s.derived = {DerivedRule::CmBalanceXi2};
    s.f1 = f1;
    s.f2 = f2;
    return s;
}

SweepSpec pa_preset(std::string name, std::vector<double> cases, std::vector<Metric> metrics) {
    SweepSpec s;
    s.name = std::move(name);
    s.model = Model::Pa;
    s.size = 1000000;
    s.replicates = 1;
    s.swept = "case";
    s.grid = std::move(cases);
    s.derived = {DerivedRule::PaCaseParams};
    s.metrics = std::move(metrics);
    return s;
}

DistSpec po(double mean) { return DistSpec{DistSpec::Kind::Poisson, mean}; }
DistSpec ys(double mean) { return DistSpec{DistSpec::Kind::YuleSimon, mean}; }

struct PresetEntry {
    PresetInfo info;
    SweepSpec spec;
};

std::vector<PresetEntry> build_presets() {
    std::vector<PresetEntry> v;
    auto add = [&](SweepSpec spec, std::string description) {
        v.push_back({{spec.name, std::move(description)}, std::move(spec)});
    };

    // Two-type Erdos-Renyi, fixed means, sweeping the cross-type rate.
    add(er_means_preset("fig_ER_Ex2", 0.5, 0.5, 1.2, arithmetic_grid(0.0, 0.05, 21)),
        "ER, p1=0.5, mu=(0.5,1.2): lambda_c drops below 1, component shrinks with beta");
    add(er_means_preset("fig_ER_Ex2_red", 0.5, 0.7, 1.1, arithmetic_grid(0.0, 0.05, 21)),
        "ER, p1=0.5, mu=(0.7,1.1): companion series to fig_ER_Ex2");
    add(er_means_preset("fig_ER_Ex2_2", 0.5, 0.5, 2.5, arithmetic_grid(0.0, 0.05, 21)),
        "ER, p1=0.5, mu=(0.5,2.5): supercritical type strong enough, component grows with beta");
    add(er_means_preset("fig_ER_Ex2_2_red", 0.5, 0.5, 2.0, arithmetic_grid(0.0, 0.05, 21)),
        "ER, p1=0.5, mu=(0.5,2.0)");
    add(er_means_preset("fig_ER_Ex2_2_green", 0.5, 0.5, 1.5, arithmetic_grid(0.0, 0.05, 21)),
        "ER, p1=0.5, mu=(0.5,1.5): surplus too small, component shrinks");
    add(er_means_preset("fig_ER_Ex3", 0.5, 1.2, 1.5, arithmetic_grid(0.0, 0.1, 25)),
        "ER, two supercritical types, mu=(1.2,1.5)");
    add(er_means_preset("fig_ER_Ex3_red", 0.5, 1.2, 2.0, arithmetic_grid(0.0, 0.1, 25)),
        "ER, two supercritical types, mu=(1.2,2.0)");
    add(er_means_preset("fig_ER_Ex4", 0.1, 0.5, 1.2, arithmetic_grid(0.0, 0.05, 12)),
        "ER minority study, p1=0.1, mu=(0.5,1.2)");
    add(er_means_preset("fig_ER_Ex4_red", 0.9, 0.5, 1.2, arithmetic_grid(0.0, 0.05, 27)),
        "ER minority study, p1=0.9, mu=(0.5,1.2)");
    add(er_p1_preset("fig_ER_Ex5", 1.1, 1.5, 0.5),
        "ER sweep over p1, alpha=(1.1,1.5), beta=0.5: subcritical window, small components "
        "peak at criticality");
    add(er_p1_preset("fig_ER_Ex5_red", 0.3, 1.5, 0.5),
        "ER sweep over p1, alpha=(0.3,1.5), beta=0.5");

    // Two-type configuration model, balance-driven xi2, sweeping 1 - xi1.
    add(cm_preset("fig_CM_PoPo", 0.5, po(0.5), po(1.5)),
        "CM Poisson(0.5)/Poisson(1.5), p1=0.5");
    add(cm_preset("fig_CM_PoPo_p04", 0.4, po(0.5), po(1.5)), "CM Poisson(0.5)/Poisson(1.5), p1=0.4");
    add(cm_preset("fig_CM_PoPo_p06", 0.6, po(0.5), po(1.5)), "CM Poisson(0.5)/Poisson(1.5), p1=0.6");
    add(cm_preset("fig_CM_PoPo_p07", 0.7, po(0.5), po(1.5)), "CM Poisson(0.5)/Poisson(1.5), p1=0.7");
    add(cm_preset("fig_CM_YSYS", 0.5, ys(2.5), ys(1.2)),
        "CM Yule-Simon mean 2.5 (infinite variance) vs 1.2 (subcritical)");
    add(cm_preset("fig_CM_YSYS_mu1_20", 0.5, ys(2.0), ys(1.2)), "CM Yule-Simon means (2.0,1.2)");
    add(cm_preset("fig_CM_YSYS_mu1_15", 0.5, ys(1.5), ys(1.2)), "CM Yule-Simon means (1.5,1.2)");
    add(cm_preset("fig_CM_YSYS_b", 0.5, ys(2.0), ys(2.5)), "CM Yule-Simon means (2.0,2.5), both supercritical");
    add(cm_preset("fig_CM_YSYS_b_red", 0.5, ys(1.5), ys(2.0)), "CM Yule-Simon means (1.5,2.0)");
    add(cm_preset("fig_CM_YSYS_b_green", 0.5, ys(1.5), ys(2.5)), "CM Yule-Simon means (1.5,2.5)");
    add(cm_preset("fig_CM_PoYS", 0.5, po(2.5), ys(1.1)),
        "CM Poisson(2.5) vs subcritical Yule-Simon mean 1.1");
    add(cm_preset("fig_CM_PoYS_mu1_20", 0.5, po(2.0), ys(1.1)),
        "CM Poisson(2.0) vs Yule-Simon 1.1: non-monotone component size");
    add(cm_preset("fig_CM_PoYS_mu1_15", 0.5, po(1.5), ys(1.1)), "CM Poisson(1.5) vs Yule-Simon 1.1");
    add(cm_preset("fig_CM_PoYS_mu1_12", 0.5, po(1.2), ys(1.1)), "CM Poisson(1.2) vs Yule-Simon 1.1");
    add(cm_preset("fig_CM_PoYS_b", 0.5, po(2.0), ys(2.5)), "CM Poisson(2.0) vs Yule-Simon 2.5");
    add(cm_preset("fig_CM_PoYS_b_red", 0.5, po(1.5), ys(2.0)), "CM Poisson(1.5) vs Yule-Simon 2.0");
    add(cm_preset("fig_CM_PoYS_b_green", 0.5, po(1.5), ys(2.5)), "CM Poisson(1.5) vs Yule-Simon 2.5");

    // Preferential attachment tables; one graph per case at desk scale t=1e6.
    add(pa_preset("table2", {1, 2, 3, 4, 5}, {Metric::Exponents}),
        "PA tail exponents, fitted vs analytic, cases I-V");
    add(pa_preset("table3", {1, 2, 3, 4, 5}, {Metric::CrossDegrees}),
        "PA mean degrees split per type, measured vs predicted, cases I-V");
    add(pa_preset("table4", {1, 2, 3, 4, 5}, {Metric::PairExponents}),
        "PA fitted exponents of the degrees split per type, cases I-V");
    const char* roman[5] = {"I", "II", "III", "IV", "V"};
    for (int c = 1; c <= 5; ++c) {
        add(pa_preset(std::string("table2_case") + roman[c - 1], {static_cast<double>(c)},
                      {Metric::Exponents, Metric::CrossDegrees, Metric::PairExponents}),
            std::string("PA case ") + roman[c - 1] + " full report");
    }
    add(pa_preset("fig_PA_loglog_caseI", {1}, {Metric::Ccdf}), "PA case I degree CCDF, log-log");
    add(pa_preset("fig_PA_loglog_caseV", {5}, {Metric::Ccdf}), "PA case V degree CCDF, log-log");
    add(pa_preset("fig_PA_scatter_caseI", {1}, {Metric::Scatter}), "PA case I degree scatter");
    add(pa_preset("fig_PA_scatter_caseII", {2}, {Metric::Scatter}), "PA case II degree scatter");
    add(pa_preset("fig_PA_scatter_caseV", {5}, {Metric::Scatter}), "PA case V degree scatter");
    return v;
}

const std::vector<PresetEntry>& presets() {
    static const std::vector<PresetEntry> v = build_presets();
    return v;
}

const std::map<std::string, std::string>& preset_aliases() {
    static const std::map<std::string, std::string> aliases = {
        {"fig1", "fig_ER_Ex2"},         {"fig2", "fig_ER_Ex2_2"},
        {"fig3", "fig_ER_Ex3"},         {"fig4", "fig_ER_Ex4"},
        {"fig5", "fig_ER_Ex5"},         {"fig6", "fig_CM_PoPo"},
        {"fig7", "fig_CM_YSYS"},        {"fig8", "fig_CM_PoYS"},
        {"fig9", "fig_PA_loglog_caseI"},
        {"fig_ER_Ex2(2)", "fig_ER_Ex2_2"},
        {"fig_ER_Ex2(2)_red", "fig_ER_Ex2_2_red"},
        {"fig_ER_Ex2(2)_green", "fig_ER_Ex2_2_green"},
    };
    return aliases;
}

} // namespace

const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> infos = [] {
        std::vector<PresetInfo> out;
        for (const PresetEntry& e : presets()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

SweepSpec preset(const std::string& name) {
    std::string canonical = name;
    const auto alias = preset_aliases().find(name);
    if (alias != preset_aliases().end()) canonical = alias->second;
    for (const PresetEntry& e : presets())
        if (e.info.name == canonical) return e.spec;
    std::ostringstream os;
    os << "unknown preset '" << name << "'. Available presets:\n";
    for (const PresetInfo& i : preset_catalog()) os << "  " << i.name << " - " << i.description << "\n";
    os << "Aliases:";
    for (const auto& [a, c] : preset_aliases()) os << " " << a << "->" << c;
    throw std::invalid_argument(os.str());
}

} // namespace twotype
