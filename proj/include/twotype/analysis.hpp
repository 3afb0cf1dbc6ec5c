#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "twotype/core.hpp"

namespace twotype {

struct ComponentReport {
    std::vector<std::uint64_t> sizes_desc; // component sizes, non-increasing
    double largest_fraction = 0.0;         // sizes_desc[0] / n
    std::uint64_t largest_type1 = 0;       // type counts inside the largest component
    std::uint64_t largest_type2 = 0;
};

// Exact connected components via union-find (path halving, union by size).
// Self-loops merge nothing; multi-edges are harmless.
ComponentReport components(const TypedGraph& g);

// First k entries of the descending size list, zero-padded.
std::vector<std::uint64_t> top_k_component_sizes(const TypedGraph& g, std::size_t k);

struct CcdfEntry {
    std::uint64_t k;        // degree value present in the data
    std::uint64_t count_ge; // vertices of the group with degree >= k
    double fraction_ge;     // count_ge / group size
};
using CcdfTable = std::vector<CcdfEntry>;

struct ExponentFit {
    double gamma_hat = 0.0; // minus the log-log OLS slope
    std::uint64_t k_min = 0;
    std::uint64_t k_max = 0;
    double r_squared = 0.0;
    std::size_t n_points = 0;
};

// Per-type degree structure: histograms and CCDFs of the total degree,
// CCDFs of the degrees split per target type, the mean cross-degree matrix,
// and the per-type correlation between type-1 and type-2 degree.
struct DegreeReport {
    std::array<std::uint64_t, 2> n_type{0, 0};
    std::array<std::vector<std::uint64_t>, 2> hist;       // hist[i][k] = #type-i vertices with degree k
    std::array<CcdfTable, 2> ccdf;                        // total degree, k >= 1
    std::array<std::array<CcdfTable, 2>, 2> pair_ccdf;    // [from][to], k >= 1
    std::array<std::array<double, 2>, 2> cross_mean{};    // mean type-j degree of type-i vertices
    std::array<std::optional<double>, 2> cross_correlation; // corr(D->1, D->2) per type; empty if degenerate
};

DegreeReport degree_report(const TypedGraph& g);

// Ordinary least squares of log(fraction) on log(k) over table entries with
// k_min <= k <= k_max and positive value. Throws InsufficientData with fewer
// than 5 usable points.
ExponentFit fit_tail_exponent(const CcdfTable& ccdf, std::uint64_t k_min, std::uint64_t k_max);

// Default fit window: the largest k whose CCDF still counts at least
// min_count vertices (0 if the table is empty). Small-k curvature is the
// caller's concern via k_min.
std::uint64_t default_fit_kmax(const CcdfTable& ccdf, std::uint64_t min_count = 50);

inline constexpr std::uint64_t kDefaultFitKmin = 10;

// Largest solution of s = 1 - exp(-lambda s) on [0,1]: the limiting giant
// component fraction of a one-type Poisson(lambda) graph. Used as an
// independent oracle for symmetric two-type checks.
double giant_fraction_fixed_point(double lambda);

} // namespace twotype
