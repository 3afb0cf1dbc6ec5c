#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "twotype/analysis.hpp"
#include "twotype/analytic.hpp"
#include "twotype/generators.hpp"

using namespace twotype;

namespace {

std::uint64_t total_degree(const TypedGraph& g) {
    const VertexDegrees d = total_and_per_type_degrees(g);
    std::uint64_t sum = 0;
    for (std::uint64_t v = 0; v < g.n; ++v) sum += d.total[v];
    return sum;
}

std::pair<double, double> mean_degree_per_type(const TypedGraph& g) {
    const VertexDegrees d = total_and_per_type_degrees(g);
    double sum[2] = {0, 0};
    std::uint64_t cnt[2] = {0, 0};
    for (std::uint64_t v = 0; v < g.n; ++v) {
        sum[type_index(g.types[v])] += d.total[v];
        ++cnt[type_index(g.types[v])];
    }
    return {cnt[0] ? sum[0] / cnt[0] : 0.0, cnt[1] ? sum[1] / cnt[1] : 0.0};
}

} // namespace

TEST_CASE("generate_er") {
    SUBCASE("edge probability caps at 1") {
        // alpha1 >= n makes the single type-1 pair certain.
        RngStream rng(1, 0);
        const TypedGraph g = generate_er(2, {1.0, 5.0, 0.0, 0.1}, rng);
        REQUIRE(g.n == 2);
        CHECK(g.edges.size() == 1);
    }
    SUBCASE("beta=0 produces no cross-type edges") {
        RngStream rng(2, 0);
        const TypedGraph g = generate_er(10000, {0.5, 1.5, 1.5, 0.0}, rng);
        for (const Edge& e : g.edges) CHECK(g.types[e.u] == g.types[e.v]);
    }
    SUBCASE("simple graph: no loops or duplicate pairs") {
        RngStream rng(3, 0);
        const TypedGraph g = generate_er(2000, {0.5, 3.0, 2.0, 1.0}, rng);
        std::map<std::pair<std::uint32_t, std::uint32_t>, int> seen;
        for (const Edge& e : g.edges) {
            CHECK(e.u != e.v);
            const auto key = std::minmax(e.u, e.v);
            CHECK(++seen[{key.first, key.second}] == 1);
        }
    }
    SUBCASE("per-type mean degree matches mu over 100 replicates") {
        const double beta = 0.5;
        const double a1 = er_alpha_from_mean(0.5, 1.5, beta, VertexType::Type1);
        const double a2 = er_alpha_from_mean(0.5, 1.5, beta, VertexType::Type2);
        const ErParams p{0.5, a1, a2, beta};
        double m1 = 0, m2 = 0;
        const int reps = 100;
        for (int r = 0; r < reps; ++r) {
            RngStream rng(100, static_cast<std::uint64_t>(r));
            const auto [x, y] = mean_degree_per_type(generate_er(10000, p, rng));
            m1 += x;
            m2 += y;
        }
        CHECK(std::abs(m1 / reps - 1.5) < 0.045);
        CHECK(std::abs(m2 / reps - 1.5) < 0.045);
    }
    SUBCASE("mixed-Poisson limit: per-type degree variance tracks the mean") {
        RngStream rng(4, 0);
        const TypedGraph g = generate_er(10000, {0.5, 2.0, 1.0, 0.6}, rng);
        const VertexDegrees d = total_and_per_type_degrees(g);
        for (int ti = 0; ti < 2; ++ti) {
            double sum = 0, sum2 = 0, cnt = 0;
            for (std::uint64_t v = 0; v < g.n; ++v) {
                if (type_index(g.types[v]) != ti) continue;
                sum += d.total[v];
                sum2 += static_cast<double>(d.total[v]) * d.total[v];
                cnt += 1;
            }
            const double mean = sum / cnt;
            const double var = sum2 / cnt - mean * mean;
            CHECK(std::abs(var - mean) / mean < 0.10);
        }
    }
}

TEST_CASE("generate_cm") {
    SUBCASE("all-zero degrees give an empty multigraph with no erasures") {
        const auto zero = DegreeDistribution::explicit_table({{0, 1.0}});
        RngStream rng(5, 0);
        const CmResult res = generate_cm(500, 0.5, zero, zero, 0.5, 0.5, rng);
        CHECK(res.graph.edges.empty());
        CHECK(res.report.erased_halfedges == 0);
        CHECK(res.report.erased_affected_vertices == 0);
    }
    SUBCASE("xi=1 keeps the types decoupled") {
        const auto f = DegreeDistribution::poisson(1.5);
        RngStream rng(6, 0);
        const CmResult res = generate_cm(5000, 0.5, f, f, 1.0, 1.0, rng);
        for (const Edge& e : res.graph.edges) CHECK(res.graph.types[e.u] == res.graph.types[e.v]);
        CHECK(res.report.labels_cross1 == 0);
        CHECK(res.report.labels_cross2 == 0);
    }
    SUBCASE("erased count identity |L1'-L2'| + parities") {
        for (std::uint64_t s = 0; s < 20; ++s) {
            RngStream rng(7, s);
            const CmResult res = generate_cm(300, 0.5, DegreeDistribution::poisson(0.5),
                                             DegreeDistribution::poisson(1.5), 0.4, 0.8, rng);
            const std::uint64_t expect =
                (res.report.labels_cross1 > res.report.labels_cross2
                     ? res.report.labels_cross1 - res.report.labels_cross2
                     : res.report.labels_cross2 - res.report.labels_cross1) +
                res.report.labels_own1 % 2 + res.report.labels_own2 % 2;
            CHECK(res.report.erased_halfedges == expect);
            // every half-edge is either paired into an edge or erased
            const std::uint64_t halfedges = res.report.labels_own1 + res.report.labels_own2 +
                                            res.report.labels_cross1 + res.report.labels_cross2;
            CHECK(2 * res.graph.edges.size() + res.report.erased_halfedges == halfedges);
        }
    }
    SUBCASE("erased-affected fraction is small under balance") {
        // xi1=0.4 with (p1, mu1, mu2) = (0.5, 0.5, 1.5) balances at xi2=0.8.
        double frac = 0.0;
        const int reps = 100;
        for (int r = 0; r < reps; ++r) {
            RngStream rng(8, static_cast<std::uint64_t>(r));
            const CmResult res = generate_cm(10000, 0.5, DegreeDistribution::poisson(0.5),
                                             DegreeDistribution::poisson(1.5), 0.4, 0.8, rng);
            frac += static_cast<double>(res.report.erased_affected_vertices) / 10000.0;
        }
        CHECK(frac / reps < 0.02);
    }
    SUBCASE("post-erasure degree distribution stays within TV 0.02 of F_i") {
        RngStream rng(9, 0);
        const CmResult res = generate_cm(10000, 0.5, DegreeDistribution::poisson(0.5),
                                         DegreeDistribution::poisson(1.5), 0.4, 0.8, rng);
        const VertexDegrees d = total_and_per_type_degrees(res.graph);
        for (int ti = 0; ti < 2; ++ti) {
            std::map<std::uint64_t, double> emp;
            double cnt = 0;
            for (std::uint64_t v = 0; v < res.graph.n; ++v) {
                if (type_index(res.graph.types[v]) != ti) continue;
                emp[d.total[v]] += 1.0;
                cnt += 1.0;
            }
            const double lambda = ti == 0 ? 0.5 : 1.5;
            double tv = 0.0;
            for (std::uint64_t k = 0; k <= 30; ++k) {
                const double pk = std::exp(-lambda + static_cast<double>(k) * std::log(lambda) -
                                           std::lgamma(static_cast<double>(k) + 1.0));
                const double ek = emp.count(k) ? emp[k] / cnt : 0.0;
                tv += std::abs(pk - ek);
            }
            CHECK(tv / 2.0 < 0.02);
        }
    }
}

TEST_CASE("generate_pa") {
    SUBCASE("t=1 is exactly the seed graph") {
        RngStream rng(10, 0);
        const TypedGraph g = generate_pa(1, {0.5, 0.8, 0.8}, rng);
        CHECK(g.n == 2);
        CHECK(g.types[0] == VertexType::Type1);
        CHECK(g.types[1] == VertexType::Type2);
        REQUIRE(g.edges.size() == 1);
        CHECK(g.edges[0] == Edge{0, 1});
    }
    SUBCASE("t+1 vertices, t edges, connected") {
        for (std::uint64_t t : {2ull, 17ull, 1000ull}) {
            RngStream rng(11, t);
            const TypedGraph g = generate_pa(t, {0.3, 0.7, 0.4}, rng);
            CHECK(g.n == t + 1);
            CHECK(g.edges.size() == t);
            CHECK(total_degree(g) == 2 * t);
            const ComponentReport comp = components(g);
            CHECK(comp.sizes_desc.size() == 1);
            CHECK(comp.largest_fraction == 1.0);
        }
    }
    SUBCASE("L_i(t)/t approaches p_i + a_i") {
        const PaParams p{0.5, 0.8, 0.8}; // b1 = 1.0
        RngStream rng(12, 0);
        const TypedGraph g = generate_pa(1000000, p, rng);
        const VertexDegrees d = total_and_per_type_degrees(g);
        double l1 = 0;
        for (std::uint64_t v = 0; v < g.n; ++v)
            if (g.types[v] == VertexType::Type1) l1 += d.total[v];
        CHECK(std::abs(l1 / 1e6 - 1.0) < 0.01);
    }
}

TEST_CASE("vertex ids are 32-bit: oversized requests are rejected") {
    RngStream rng(1, 0);
    const std::uint64_t too_big = (std::uint64_t{1} << 32) + 1;
    CHECK_THROWS_AS(generate_er(too_big, {0.5, 1.0, 1.0, 0.5}, rng), std::invalid_argument);
    CHECK_THROWS_AS(generate_pa(too_big, {0.5, 0.5, 0.5}, rng), std::invalid_argument);
}

TEST_CASE("generators are deterministic in (params, seed)") {
    SUBCASE("er") {
        RngStream a(77, 3), b(77, 3);
        const TypedGraph g1 = generate_er(3000, {0.4, 1.1, 1.7, 0.6}, a);
        const TypedGraph g2 = generate_er(3000, {0.4, 1.1, 1.7, 0.6}, b);
        CHECK(g1.types == g2.types);
        CHECK(g1.edges == g2.edges);
    }
    SUBCASE("cm") {
        RngStream a(78, 4), b(78, 4);
        const auto f1 = DegreeDistribution::poisson(0.9);
        const auto f2 = DegreeDistribution::yule_simon_from_mean(1.5);
        const CmResult r1 = generate_cm(3000, 0.6, f1, f2, 0.3, 0.7, a);
        const CmResult r2 = generate_cm(3000, 0.6, f1, f2, 0.3, 0.7, b);
        CHECK(r1.graph.edges == r2.graph.edges);
        CHECK(r1.report.erased_halfedges == r2.report.erased_halfedges);
    }
    SUBCASE("pa") {
        RngStream a(79, 5), b(79, 5);
        const TypedGraph g1 = generate_pa(20000, {0.2, 0.2, 0.2}, a);
        const TypedGraph g2 = generate_pa(20000, {0.2, 0.2, 0.2}, b);
        CHECK(g1.types == g2.types);
        CHECK(g1.edges == g2.edges);
    }
}
