#include "twotype/degree_dist.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "twotype/errors.hpp"

#include "log_gamma_ratio.hpp"

namespace twotype {

namespace {
constexpr std::size_t kMaxExplicitSupport = 1'000'000;
}

DegreeDistribution DegreeDistribution::poisson(double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("Poisson degree distribution requires mean > 0");
    return DegreeDistribution(Kind::Poisson, mean);
}

DegreeDistribution DegreeDistribution::yule_simon(double shape) {
    if (!(shape > 1.0))
        throw std::invalid_argument("Yule-Simon degree distribution requires shape > 1 "
                                    "(shape <= 1 has infinite mean)");
    return DegreeDistribution(Kind::YuleSimon, shape);
}

DegreeDistribution DegreeDistribution::yule_simon_from_mean(double mean) {
    return yule_simon(yule_simon_shape_from_mean(mean));
}

DegreeDistribution DegreeDistribution::explicit_table(std::vector<std::pair<std::uint64_t, double>> pmf) {
    if (pmf.empty()) throw std::invalid_argument("explicit degree table must be non-empty");
    if (pmf.size() > kMaxExplicitSupport)
        throw std::invalid_argument("explicit degree table exceeds 1e6 support points; "
                                    "use a parametric variant instead");
    std::sort(pmf.begin(), pmf.end());
    for (std::size_t i = 0; i + 1 < pmf.size(); ++i)
        if (pmf[i].first == pmf[i + 1].first)
            throw std::invalid_argument("explicit degree table has duplicate support point " +
                                        std::to_string(pmf[i].first));
    double sum = 0.0;
    for (auto& [k, p] : pmf) {
        if (!(p >= 0.0)) throw std::invalid_argument("explicit degree table has negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("explicit degree table probabilities sum to " +
                                    std::to_string(sum) + ", expected 1 within 1e-12");
    DegreeDistribution d(Kind::Explicit, 0.0);
    d.table_ = std::move(pmf);
    d.cdf_.reserve(d.table_.size());
    double cum = 0.0;
    for (auto& [k, p] : d.table_) {
        p /= sum;
        cum += p;
        d.cdf_.push_back(cum);
    }
    d.cdf_.back() = 1.0;
    return d;
}

DegreeDistribution DegreeDistribution::explicit_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open degree table file: " + path);
    std::vector<std::pair<std::uint64_t, double>> pmf;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream is(line);
        std::uint64_t k;
        double p;
        if (!(is >> k >> p)) throw ParseError("expected 'k p_k' in degree table", line_no);
        pmf.emplace_back(k, p);
    }
    return explicit_table(std::move(pmf));
}

double DegreeDistribution::mean() const {
    switch (kind_) {
        case Kind::Poisson: return param_;
        case Kind::YuleSimon: return param_ / (param_ - 1.0);
        case Kind::Explicit: {
            double m = 0.0;
            for (const auto& [k, p] : table_) m += static_cast<double>(k) * p;
            return m;
        }
    }
    throw std::logic_error("unreachable");
}

ExtReal DegreeDistribution::size_biased_mean() const {
    switch (kind_) {
        case Kind::Poisson: return param_;
        case Kind::YuleSimon:
            if (param_ <= 2.0) return ExtReal::inf();
            return 2.0 / (param_ - 2.0);
        case Kind::Explicit: {
            const double mu = mean();
            if (mu == 0.0) return 0.0; // point mass at zero: no edges at all
            double m2 = 0.0;
            for (const auto& [k, p] : table_) m2 += static_cast<double>(k) * static_cast<double>(k) * p;
            return (m2 - mu) / mu;
        }
    }
    throw std::logic_error("unreachable");
}

std::uint64_t DegreeDistribution::sample(RngStream& rng) const {
    switch (kind_) {
        case Kind::Poisson:
            return rng.poisson(param_);
        case Kind::YuleSimon: {
            // Exponential-geometric mixture: W ~ Exp(rate rho), then
            // K ~ Geometric(success e^-W) on {1,2,...}. Integrating out W
            // gives exactly rho * B(k, rho+1).
            const double w = rng.exponential(param_);
            const double q = std::exp(-w);
            if (q >= 1.0) return 1;
            const double u = rng.uniform_pos();
            const double k = 1.0 + std::floor(std::log(u) / std::log1p(-q));
            return static_cast<std::uint64_t>(k);
        }
        case Kind::Explicit: {
            const double u = rng.uniform01();
            const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
            const std::size_t idx = it == cdf_.end() ? cdf_.size() - 1
                                                     : static_cast<std::size_t>(it - cdf_.begin());
            return table_[idx].first;
        }
    }
    throw std::logic_error("unreachable");
}

std::string DegreeDistribution::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Poisson: os << "poisson(mean=" << param_ << ")"; break;
        case Kind::YuleSimon: os << "yule_simon(shape=" << param_ << ",mean=" << mean() << ")"; break;
        case Kind::Explicit: os << "explicit(" << table_.size() << " points,mean=" << mean() << ")"; break;
    }
    return os.str();
}

double yule_simon_pmf(double rho, std::uint64_t k) {
    if (!(rho > 0.0)) throw std::domain_error("yule_simon_pmf: rho must be > 0");
    if (k < 1) throw std::domain_error("yule_simon_pmf: k must be >= 1");
    // rho * B(k, rho+1) = rho/(rho+1) * prod_{j=1}^{k-1} j/(j+rho+1).
    if (k <= 1024) {
        double p = rho / (rho + 1.0);
        for (std::uint64_t j = 1; j < k; ++j)
            p *= static_cast<double>(j) / (static_cast<double>(j) + rho + 1.0);
        return p;
    }
    const double kd = static_cast<double>(k);
    const double log_p =
        std::log(rho) + std::lgamma(rho + 1.0) + detail::log_gamma_ratio_large_k(kd, rho + 1.0);
    return std::exp(log_p);
}

double yule_simon_shape_from_mean(double mean) {
    if (!(mean > 1.0))
        throw InfeasibleParams("yule_simon_shape_from_mean: the Yule-Simon mean rho/(rho-1) is "
                               "always > 1, got " + std::to_string(mean));
    return mean / (mean - 1.0);
}

} // namespace twotype
