#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twotype/degree_dist.hpp"

namespace twotype {

enum class Model { Er, Cm, Pa };

// Parametric degree distribution spec for configuration-model sweeps.
struct DistSpec {
    enum class Kind { Poisson, YuleSimon };
    Kind kind = Kind::Poisson;
    double mean = 1.0;

    DegreeDistribution build() const {
        return kind == Kind::Poisson ? DegreeDistribution::poisson(mean)
                                     : DegreeDistribution::yule_simon_from_mean(mean);
    }
    friend bool operator==(const DistSpec&, const DistSpec&) = default;
};

// Rules that fill in parameters a grid point does not state directly.
enum class DerivedRule {
    ErAlphasFromMeans, // alpha_i from fixed mu_i and beta
    CmBalanceXi2,      // xi2 from the half-edge balance condition
    PaCaseParams,      // (p1, theta1, theta2) from the "case" parameter (1..5)
};

enum class Metric {
    Components,    // largest/2nd/3rd component fractions (ER, CM)
    LambdaC,       // critical-parameter plot marker (ER, CM)
    Erasure,       // erased-affected vertex fraction (CM)
    Exponents,     // per-type tail exponents, analytic and fitted (PA)
    CrossDegrees,  // mean degree split per type, measured vs predicted (PA)
    PairExponents, // fitted exponents of the degrees split per type (PA)
    Ccdf,          // per-type degree CCDF curves; single-point grids only (PA)
    Scatter,       // (D->1, D->2) scatter sample; single-point grids only (PA)
};

// Declarative sweep: one swept parameter over a strictly increasing grid,
// everything else fixed or derived, `replicates` seeded runs per point.
struct SweepSpec {
    std::string name = "custom";
    Model model = Model::Er;
    std::uint64_t size = 10000; // n for ER/CM, final time t for PA
    std::uint64_t replicates = 1;
    std::uint64_t master_seed = 1;
    std::string swept;
    std::vector<double> grid;
    std::map<std::string, double> fixed;
    std::vector<DerivedRule> derived;
    DistSpec f1, f2;              // CM only
    std::vector<Metric> metrics;  // empty selects the model defaults

    std::vector<Metric> effective_metrics() const;
    void validate() const;
};

struct SweepRow {
    double x = 0.0;
    bool feasible = true;
    std::string flags; // "" when clean; infeasibility/fit notes otherwise
    std::vector<std::optional<double>> cells;
};

struct CurveSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<std::string> columns; // cell names, aligned with SweepRow::cells
    std::vector<SweepRow> rows;       // one per grid point
    std::vector<CurveSeries> curves;  // ccdf/scatter series (single-point specs)
};

// Deterministic in (spec, master_seed): replicate r of grid point i uses
// stream index i*replicates + r, and jobs only changes wall time, not output.
SweepResult run_sweep(const SweepSpec& spec, unsigned jobs = 1);

struct PresetInfo {
    std::string name;
    std::string description;
};

// Catalog of canonical presets (one per figure series / table of interest).
const std::vector<PresetInfo>& preset_catalog();

// Resolves a preset or alias name. Throws std::invalid_argument whose message
// lists the catalog when the name is unknown.
SweepSpec preset(const std::string& name);

// Full result table: optional comment header, one header row, one data row
// per grid point, flags last. Byte-identical across reruns with equal inputs.
std::string sweep_csv(const SweepResult& result);
void emit_csv(const SweepResult& result, const std::string& path);

// Column names attributed to one metric (used for per-metric CSV artifacts).
std::vector<std::string> metric_columns(const SweepSpec& spec, Metric m);
std::string sweep_metric_csv(const SweepResult& result, Metric m);

enum class PlotKind { Line, LogLog, Scatter };

// Standalone SVG: Line plots the per-point scalar series, LogLog the CCDF
// curves with fitted-slope annotations, Scatter the degree scatter sample.
void emit_plot(const SweepResult& result, PlotKind kind, const std::string& path);
std::string sweep_plot_svg(const SweepResult& result, PlotKind kind);

// Writes one CSV and one SVG per requested metric into out_dir; returns the
// paths written.
std::vector<std::string> write_artifacts(const SweepResult& result, const std::string& out_dir);

// JSON config round trip (schema documented in the README).
SweepSpec sweep_from_json(const std::string& json_text);
SweepSpec load_sweep_config(const std::string& path);
std::string sweep_to_json(const SweepSpec& spec);

// Shortest round-trip decimal formatting shared by CSV/SVG emitters.
std::string format_double(double v);

const char* model_name(Model m);
const char* metric_name(Metric m);

} // namespace twotype
