#pragma once

#include <cstdint>
#include <utility>

#include "twotype/core.hpp"
#include "twotype/extended.hpp"

namespace twotype {

// Two-type Erdos-Renyi parameters. Edge probability is min{alpha_i/n, 1}
// between two type-i vertices and min{beta/n, 1} across types. beta = 0 is
// admitted as the degenerate decoupled case.
struct ErParams {
    double p1;
    double alpha1;
    double alpha2;
    double beta;

    double p2() const { return 1.0 - p1; }
    double p(VertexType t) const { return t == VertexType::Type1 ? p1 : p2(); }
    double alpha(VertexType t) const { return t == VertexType::Type1 ? alpha1 : alpha2; }
    void validate() const;
};

// Configuration-model mixing parameters: own-type label probabilities xi_i
// and size-biased means nu_i (possibly infinite).
struct CmMixParams {
    double xi1;
    double xi2;
    ExtReal nu1;
    ExtReal nu2;

    void validate() const;
};

// Two-type preferential attachment parameters. p1 = 1 (or 0) is admitted so
// the one-type reduction of the degree formulas can be evaluated directly.
struct PaParams {
    double p1;
    double theta1;
    double theta2;

    double p2() const { return 1.0 - p1; }
    double p(VertexType t) const { return t == VertexType::Type1 ? p1 : p2(); }
    double theta(VertexType t) const { return t == VertexType::Type1 ? theta1 : theta2; }
    void validate() const;
};

// mu_i = alpha_i p_i + beta p_{i^c}, the limiting mean degree per type.
std::pair<double, double> er_mean_degrees(const ErParams& p);

// Critical parameter: largest eigenvalue of M = [[a1 p1, b p2],[b p1, a2 p2]],
// in the closed form (a1p1+a2p2)/2 + sqrt(((a1p1+a2p2)/2)^2 + p1p2(b^2-a1a2)).
double er_lambda_c(const ErParams& p);

// Same quantity written as a function of (beta, mu1, mu2):
//   1/2 (mu1 + mu2 - beta + sqrt((mu1-mu2)^2 + beta^2 + 2 beta (mu1-mu2)(p1-p2)))
// Requires beta <= min(mu1/p2, mu2/p1) so the implied alphas are nonnegative.
double er_lambda_c_from_means(double p1, double mu1, double mu2, double beta);

// Inverts mu_i = alpha_i p_i + beta p_{i^c} for alpha_i; supports fixed-mean
// sweeps over beta. Throws InfeasibleParams when beta > mu_i / p_{i^c}.
double er_alpha_from_mean(double p1, double mu_i, double beta, VertexType which);

// Critical parameter of the two-type configuration model; +infinity as soon
// as one size-biased mean is infinite.
ExtReal cm_lambda_c(const CmMixParams& m);

// Solves p1 mu1 (1 - xi1) = p2 mu2 (1 - xi2) for xi2. Throws InfeasibleParams
// (reporting the feasible xi1 interval) when the solution leaves [0,1].
double cm_balance_xi2(double p1, double mu1, double xi1, double mu2);

struct PaRates {
    double a1; // probability an arrival attaches to a type-1 vertex
    double a2;
    double b1; // b_i = p_i + a_i, the per-step growth rate of L_i(t)
    double b2;

    double a(VertexType t) const { return t == VertexType::Type1 ? a1 : a2; }
    double b(VertexType t) const { return t == VertexType::Type1 ? b1 : b2; }
};

// a_i = p_i theta_i + p_{i^c} (1 - theta_{i^c}); a1 + a2 = 1.
PaRates pa_rates(const PaParams& p);

struct PaExponents {
    double tau1;
    double gamma1;
    double tau2;
    double gamma2;

    double gamma(VertexType t) const { return t == VertexType::Type1 ? gamma1 : gamma2; }
    double tau(VertexType t) const { return t == VertexType::Type1 ? tau1 : tau2; }
};

// tau_i = 2 + p_i / a_i (infinite when a_i = 0), gamma_i = tau_i - 1.
PaExponents pa_exponents(const PaParams& p);

// Asymptotic expected fraction of type-i vertices with degree k:
//   r_i(k) = b_i/(a_i+b_i) * Gamma(k) Gamma(b_i/a_i + 2) / Gamma(k + 1 + b_i/a_i).
// Evaluated by the telescoping product for small k (tight relative accuracy)
// and via log-Gamma differences beyond; raw Gamma ratios would overflow past
// k ~ 170.
double pa_degree_pmf(const PaParams& p, VertexType type, std::uint64_t k);

// Limiting mean number of type-j neighbors of a type-i vertex:
//   own type  2 theta_i,   cross  [p_i(1-theta_i) + p_{i^c}(1-theta_{i^c})]/p_i.
struct CrossDegreeMatrix {
    double n11, n12, n21, n22;

    double at(VertexType from, VertexType to) const {
        if (from == VertexType::Type1) return to == VertexType::Type1 ? n11 : n12;
        return to == VertexType::Type1 ? n21 : n22;
    }
};

CrossDegreeMatrix pa_expected_cross_degrees(const PaParams& p);

// Largest root of x^2 - (m11+m22) x + (m11 m22 - m12 m21). Kept as a separate
// code path from the closed forms above; used to cross-validate them.
double eigenvalue_oracle_2x2(double m11, double m12, double m21, double m22);

} // namespace twotype
