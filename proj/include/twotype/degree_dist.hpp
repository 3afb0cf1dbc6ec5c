#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twotype/extended.hpp"
#include "twotype/rng.hpp"

namespace twotype {

// Degree distribution on the nonnegative integers with finite mean, as fed to
// the configuration model: Poisson, Yule-Simon, or an explicit finite table.
class DegreeDistribution {
public:
    enum class Kind { Poisson, YuleSimon, Explicit };

    static DegreeDistribution poisson(double mean);

    // Yule-Simon with shape rho: P(D=k) = rho * B(k, rho+1), support {1,2,...}.
    // Shapes rho <= 1 have infinite mean and are rejected.
    static DegreeDistribution yule_simon(double shape);
    static DegreeDistribution yule_simon_from_mean(double mean);

    // Finite pmf table; probabilities must sum to 1 within 1e-12 and are then
    // renormalized. At most 1e6 support points.
    static DegreeDistribution explicit_table(std::vector<std::pair<std::uint64_t, double>> pmf);

    // Two-column text file "k p_k" (blank lines and #-comments skipped).
    static DegreeDistribution explicit_from_file(const std::string& path);

    Kind kind() const { return kind_; }

    double mean() const;

    // nu = (E[D^2] - mu) / mu; infinite for Yule-Simon with rho <= 2.
    ExtReal size_biased_mean() const;

    std::uint64_t sample(RngStream& rng) const;

    // Yule-Simon shape; only meaningful for that variant.
    double shape() const { return param_; }

    std::string describe() const;

private:
    DegreeDistribution(Kind k, double param) : kind_(k), param_(param) {}

    Kind kind_;
    double param_; // Poisson mean or Yule-Simon shape
    std::vector<std::pair<std::uint64_t, double>> table_;
    std::vector<double> cdf_; // cumulative probabilities aligned with table_
};

// P(D=k) = rho * B(k, rho+1) for k >= 1, any rho > 0. Decays like k^-(rho+1).
double yule_simon_pmf(double rho, std::uint64_t k);

// Inverts E[D] = rho/(rho-1); requires mean > 1.
double yule_simon_shape_from_mean(double mean);

} // namespace twotype
