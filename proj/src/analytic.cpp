#include "twotype/analytic.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "twotype/errors.hpp"

#include "log_gamma_ratio.hpp"

namespace twotype {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

void ErParams::validate() const {
    require(p1 >= 0.0 && p1 <= 1.0, "ErParams: p1 must be in [0,1], got " + num(p1));
    require(alpha1 >= 0.0, "ErParams: alpha1 must be >= 0, got " + num(alpha1));
    require(alpha2 >= 0.0, "ErParams: alpha2 must be >= 0, got " + num(alpha2));
    require(beta >= 0.0, "ErParams: beta must be >= 0, got " + num(beta));
}

void CmMixParams::validate() const {
    require(xi1 >= 0.0 && xi1 <= 1.0, "CmMixParams: xi1 must be in [0,1], got " + num(xi1));
    require(xi2 >= 0.0 && xi2 <= 1.0, "CmMixParams: xi2 must be in [0,1], got " + num(xi2));
    if (!nu1.infinite()) require(nu1.value() >= 0.0, "CmMixParams: nu1 must be >= 0");
    if (!nu2.infinite()) require(nu2.value() >= 0.0, "CmMixParams: nu2 must be >= 0");
}

void PaParams::validate() const {
    require(p1 >= 0.0 && p1 <= 1.0, "PaParams: p1 must be in [0,1], got " + num(p1));
    require(theta1 >= 0.0 && theta1 <= 1.0, "PaParams: theta1 must be in [0,1], got " + num(theta1));
    require(theta2 >= 0.0 && theta2 <= 1.0, "PaParams: theta2 must be in [0,1], got " + num(theta2));
}

std::pair<double, double> er_mean_degrees(const ErParams& p) {
    p.validate();
    const double mu1 = p.alpha1 * p.p1 + p.beta * p.p2();
    const double mu2 = p.alpha2 * p.p2() + p.beta * p.p1;
    return {mu1, mu2};
}

double er_lambda_c(const ErParams& p) {
    p.validate();
    const double half_trace = (p.alpha1 * p.p1 + p.alpha2 * p.p2()) / 2.0;
    double radicand = half_trace * half_trace +
                      p.p1 * p.p2() * (p.beta * p.beta - p.alpha1 * p.alpha2);
    // Algebraically radicand = ((a1 p1 - a2 p2)/2)^2 + p1 p2 b^2 >= 0; a
    // negative value beyond rounding noise means corrupted inputs.
    if (radicand < 0.0) {
        if (radicand < -1e-9 * (1.0 + half_trace * half_trace))
            throw std::domain_error("er_lambda_c: negative radicand, parameters corrupted");
        radicand = 0.0;
    }
    return half_trace + std::sqrt(radicand);
}

double er_lambda_c_from_means(double p1, double mu1, double mu2, double beta) {
    require(p1 > 0.0 && p1 < 1.0, "er_lambda_c_from_means: p1 must be in (0,1)");
    require(mu1 >= 0.0 && mu2 >= 0.0, "er_lambda_c_from_means: means must be >= 0");
    require(beta >= 0.0, "er_lambda_c_from_means: beta must be >= 0");
    const double p2 = 1.0 - p1;
    const double beta_max = std::min(mu1 / p2, mu2 / p1);
    if (beta > beta_max * (1.0 + 1e-12))
        throw InfeasibleParams("er_lambda_c_from_means: beta=" + num(beta) +
                               " exceeds min(mu1/p2, mu2/p1)=" + num(beta_max) +
                               " (implied alpha would be negative)");
    const double diff = mu1 - mu2;
    double radicand = diff * diff + beta * beta + 2.0 * beta * diff * (p1 - p2);
    if (radicand < 0.0) radicand = 0.0;
    return 0.5 * (mu1 + mu2 - beta + std::sqrt(radicand));
}

double er_alpha_from_mean(double p1, double mu_i, double beta, VertexType which) {
    require(p1 > 0.0 && p1 < 1.0, "er_alpha_from_mean: p1 must be in (0,1)");
    require(mu_i >= 0.0, "er_alpha_from_mean: mu must be >= 0");
    require(beta >= 0.0, "er_alpha_from_mean: beta must be >= 0");
    const double pi = which == VertexType::Type1 ? p1 : 1.0 - p1;
    const double pic = 1.0 - pi;
    if (beta * pic > mu_i * (1.0 + 1e-12) + 1e-15)
        throw InfeasibleParams("er_alpha_from_mean: beta=" + num(beta) +
                               " infeasible for mu=" + num(mu_i) + " of type " +
                               std::to_string(type_label(which)) +
                               "; maximum admissible beta is " + num(mu_i / pic));
    const double alpha = (mu_i - beta * pic) / pi;
    return alpha < 0.0 ? 0.0 : alpha;
}

ExtReal cm_lambda_c(const CmMixParams& m) {
    m.validate();
    if (m.nu1.infinite() || m.nu2.infinite()) return ExtReal::inf();
    const double n1 = m.nu1.value();
    const double n2 = m.nu2.value();
    const double half_trace = (m.xi1 * n1 + m.xi2 * n2) / 2.0;
    double radicand = half_trace * half_trace + n1 * n2 * (1.0 - m.xi1 - m.xi2);
    // Equals ((xi1 nu1 - xi2 nu2)/2)^2 + nu1 nu2 (1-xi1)(1-xi2) >= 0.
    if (radicand < 0.0) {
        if (radicand < -1e-9 * (1.0 + half_trace * half_trace))
            throw std::domain_error("cm_lambda_c: negative radicand, parameters corrupted");
        radicand = 0.0;
    }
    return half_trace + std::sqrt(radicand);
}

double cm_balance_xi2(double p1, double mu1, double xi1, double mu2) {
    require(p1 > 0.0 && p1 < 1.0, "cm_balance_xi2: p1 must be in (0,1)");
    require(mu1 > 0.0 && mu2 > 0.0, "cm_balance_xi2: means must be > 0");
    require(xi1 >= 0.0 && xi1 <= 1.0, "cm_balance_xi2: xi1 must be in [0,1]");
    const double p2 = 1.0 - p1;
    const double xi2 = 1.0 - p1 * mu1 * (1.0 - xi1) / (p2 * mu2);
    if (xi2 < -1e-12) {
        const double xi1_min = std::max(0.0, 1.0 - p2 * mu2 / (p1 * mu1));
        throw InfeasibleParams("cm_balance_xi2: balance requires xi2=" + num(xi2) +
                               " < 0; feasible xi1 interval is [" + num(xi1_min) + ", 1]");
    }
    return xi2 < 0.0 ? 0.0 : xi2;
}

PaRates pa_rates(const PaParams& p) {
    p.validate();
    PaRates r;
    r.a1 = p.p1 * p.theta1 + p.p2() * (1.0 - p.theta2);
    r.a2 = p.p2() * p.theta2 + p.p1 * (1.0 - p.theta1);
    r.b1 = p.p1 + r.a1;
    r.b2 = p.p2() + r.a2;
    return r;
}

PaExponents pa_exponents(const PaParams& p) {
    const PaRates r = pa_rates(p);
    const double inf = std::numeric_limits<double>::infinity();
    PaExponents e;
    e.tau1 = r.a1 > 0.0 ? 2.0 + p.p1 / r.a1 : inf;
    e.tau2 = r.a2 > 0.0 ? 2.0 + p.p2() / r.a2 : inf;
    e.gamma1 = e.tau1 - 1.0;
    e.gamma2 = e.tau2 - 1.0;
    return e;
}

double pa_degree_pmf(const PaParams& p, VertexType type, std::uint64_t k) {
    if (k < 1) throw std::domain_error("pa_degree_pmf: k must be >= 1");
    const PaRates rates = pa_rates(p);
    const double a = rates.a(type);
    const double b = rates.b(type);
    if (!(a > 0.0))
        throw std::domain_error("pa_degree_pmf: a_i = 0, type " +
                                std::to_string(type_label(type)) + " never receives attachments");
    const double c = b / a;
    const double r1 = b / (a + b); // 1 / (1 + a/b)
    if (k <= 1024) {
        double r = r1;
        for (std::uint64_t j = 1; j < k; ++j)
            r *= static_cast<double>(j) / (c + 1.0 + static_cast<double>(j));
        return r;
    }
    const double kd = static_cast<double>(k);
    const double log_r =
        std::log(r1) + std::lgamma(c + 2.0) + detail::log_gamma_ratio_large_k(kd, c + 1.0);
    return std::exp(log_r);
}

CrossDegreeMatrix pa_expected_cross_degrees(const PaParams& p) {
    p.validate();
    require(p.p1 > 0.0 && p.p1 < 1.0, "pa_expected_cross_degrees: both type fractions must be positive");
    CrossDegreeMatrix m;
    m.n11 = 2.0 * p.theta1;
    m.n22 = 2.0 * p.theta2;
    m.n12 = (p.p1 * (1.0 - p.theta1) + p.p2() * (1.0 - p.theta2)) / p.p1;
    m.n21 = (p.p2() * (1.0 - p.theta2) + p.p1 * (1.0 - p.theta1)) / p.p2();
    return m;
}

double eigenvalue_oracle_2x2(double m11, double m12, double m21, double m22) {
    require(m11 >= 0.0 && m12 >= 0.0 && m21 >= 0.0 && m22 >= 0.0,
            "eigenvalue_oracle_2x2: entries must be nonnegative");
    const double trace = m11 + m22;
    const double det = m11 * m22 - m12 * m21;
    double disc = trace * trace / 4.0 - det;
    if (disc < 0.0) disc = 0.0; // rounding; true discriminant is >= 0 for nonnegative m12 m21
    return trace / 2.0 + std::sqrt(disc);
}

} // namespace twotype
