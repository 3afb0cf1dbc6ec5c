#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <vector>

#include "twotype/analysis.hpp"
#include "twotype/analytic.hpp"
#include "twotype/errors.hpp"
#include "twotype/generators.hpp"

using namespace twotype;

namespace {

// Independent component oracle: BFS labeling. Each vertex is mapped to the
// smallest vertex id in its component.
std::vector<std::uint32_t> bfs_component_labels(const TypedGraph& g) {
    std::vector<std::vector<std::uint32_t>> adj(g.n);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<std::uint32_t> label(g.n, UINT32_MAX);
    for (std::uint32_t s = 0; s < g.n; ++s) {
        if (label[s] != UINT32_MAX) continue;
        std::queue<std::uint32_t> q;
        q.push(s);
        label[s] = s;
        while (!q.empty()) {
            const std::uint32_t v = q.front();
            q.pop();
            for (std::uint32_t w : adj[v]) {
                if (label[w] != UINT32_MAX) continue;
                label[w] = s;
                q.push(w);
            }
        }
    }
    return label;
}

TypedGraph random_small_graph(RngStream& rng) {
    TypedGraph g;
    g.n = 1 + rng.uniform_below(200);
    g.multigraph = true;
    for (std::uint64_t v = 0; v < g.n; ++v)
        g.types.push_back(rng.bernoulli(0.5) ? VertexType::Type1 : VertexType::Type2);
    const std::uint64_t m = rng.uniform_below(2 * g.n + 1);
    for (std::uint64_t e = 0; e < m; ++e)
        g.edges.push_back({static_cast<std::uint32_t>(rng.uniform_below(g.n)),
                           static_cast<std::uint32_t>(rng.uniform_below(g.n))});
    return g;
}

CcdfTable synthetic_power_ccdf(double gamma, std::uint64_t k_max) {
    CcdfTable t;
    for (std::uint64_t k = 1; k <= k_max; ++k)
        t.push_back({k, 1000, std::pow(static_cast<double>(k), -gamma)});
    return t;
}

} // namespace

TEST_CASE("components basics") {
    SUBCASE("edgeless graph") {
        TypedGraph g;
        g.n = 7;
        g.types.assign(7, VertexType::Type1);
        const ComponentReport rep = components(g);
        CHECK(rep.sizes_desc.size() == 7);
        CHECK(rep.sizes_desc[0] == 1);
        CHECK(rep.largest_fraction == doctest::Approx(1.0 / 7));
    }
    SUBCASE("path is one component") {
        TypedGraph g;
        g.n = 50;
        g.types.assign(50, VertexType::Type2);
        for (std::uint32_t v = 0; v + 1 < 50; ++v) g.edges.push_back({v, v + 1});
        const ComponentReport rep = components(g);
        CHECK(rep.sizes_desc.size() == 1);
        CHECK(rep.largest_fraction == 1.0);
        CHECK(rep.largest_type2 == 50);
    }
    SUBCASE("self-loops merge nothing") {
        TypedGraph g;
        g.n = 2;
        g.multigraph = true;
        g.types = {VertexType::Type1, VertexType::Type2};
        g.edges = {{0, 0}, {1, 1}};
        CHECK(components(g).sizes_desc.size() == 2);
    }
}

TEST_CASE("top_k_component_sizes") {
    TypedGraph g;
    g.n = 6;
    g.types.assign(6, VertexType::Type1);
    // two disjoint triangles
    g.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    CHECK(top_k_component_sizes(g, 3) == std::vector<std::uint64_t>{3, 3, 0});

    TypedGraph complete;
    complete.n = 5;
    complete.types.assign(5, VertexType::Type2);
    for (std::uint32_t i = 0; i < 5; ++i)
        for (std::uint32_t j = i + 1; j < 5; ++j) complete.edges.push_back({i, j});
    CHECK(top_k_component_sizes(complete, 3) == std::vector<std::uint64_t>{5, 0, 0});
}

TEST_CASE("union-find equals the BFS oracle on 500 random graphs") {
    RngStream rng(202, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const TypedGraph g = random_small_graph(rng);
        const std::vector<std::uint32_t> labels = bfs_component_labels(g);
        std::vector<std::uint64_t> oracle_sizes;
        {
            std::vector<std::uint64_t> counts(g.n, 0);
            for (std::uint32_t v = 0; v < g.n; ++v) ++counts[labels[v]];
            for (std::uint64_t c : counts)
                if (c > 0) oracle_sizes.push_back(c);
            std::sort(oracle_sizes.begin(), oracle_sizes.end(), std::greater<>());
        }
        const ComponentReport rep = components(g);
        REQUIRE(rep.sizes_desc == oracle_sizes);
    }
}

TEST_CASE("components invariant under edge permutation and relabeling") {
    RngStream rng(203, 0);
    const TypedGraph g = generate_er(500, {0.5, 1.2, 1.2, 0.5}, rng);
    TypedGraph shuffled = g;
    RngStream perm(204, 0);
    perm.shuffle(shuffled.edges);
    CHECK(components(shuffled).sizes_desc == components(g).sizes_desc);

    // relabel v -> n-1-v
    TypedGraph relabeled = g;
    const std::uint32_t n = static_cast<std::uint32_t>(g.n);
    for (std::uint64_t v = 0; v < g.n; ++v) relabeled.types[v] = g.types[g.n - 1 - v];
    for (Edge& e : relabeled.edges) e = {n - 1 - e.u, n - 1 - e.v};
    CHECK(components(relabeled).sizes_desc == components(g).sizes_desc);
}

TEST_CASE("degree_report") {
    SUBCASE("regular bipartite-ish example") {
        // every type-1 vertex has exactly degree 2 toward type 2
        TypedGraph g;
        g.n = 6;
        g.types = {VertexType::Type1, VertexType::Type1, VertexType::Type2,
                   VertexType::Type2, VertexType::Type2, VertexType::Type2};
        g.edges = {{0, 2}, {0, 3}, {1, 4}, {1, 5}};
        const DegreeReport rep = degree_report(g);
        CHECK(rep.cross_mean[0][1] == doctest::Approx(2.0));
        CHECK(rep.cross_mean[0][0] == doctest::Approx(0.0));
        // the table lists the degrees present in the data; all type-1 mass
        // sits at k=2, so the CCDF is 1 there (and implicitly 1 below)
        REQUIRE(rep.pair_ccdf[0][1].size() == 1);
        CHECK(rep.pair_ccdf[0][1][0].k == 2);
        CHECK(rep.pair_ccdf[0][1][0].fraction_ge == doctest::Approx(1.0));
        // histogram counts sum to the type counts
        CHECK(std::accumulate(rep.hist[0].begin(), rep.hist[0].end(), std::uint64_t{0}) ==
              rep.n_type[0]);
    }
    SUBCASE("degenerate correlation is undefined, not zero") {
        TypedGraph g;
        g.n = 4;
        g.types = {VertexType::Type1, VertexType::Type1, VertexType::Type2, VertexType::Type2};
        g.edges = {{0, 2}, {1, 3}};
        // every type-1 vertex has (0,1): zero variance in both coordinates
        const DegreeReport rep = degree_report(g);
        CHECK(!rep.cross_correlation[0].has_value());
    }
    SUBCASE("moment identities on a generated graph") {
        RngStream rng(205, 0);
        const TypedGraph g = generate_er(2000, {0.4, 1.5, 1.0, 0.7}, rng);
        const DegreeReport rep = degree_report(g);
        const VertexDegrees d = total_and_per_type_degrees(g);
        for (int i = 0; i < 2; ++i) {
            std::uint64_t sum_hist = 0;
            for (std::size_t k = 0; k < rep.hist[i].size(); ++k)
                sum_hist += k * rep.hist[i][k];
            std::uint64_t sum_deg = 0;
            for (std::uint64_t v = 0; v < g.n; ++v)
                if (type_index(g.types[v]) == i) sum_deg += d.total[v];
            CHECK(sum_hist == sum_deg);
        }
        // N1 * n12 == N2 * n21 (each cross edge seen once from each side)
        CHECK(rep.cross_mean[0][1] * static_cast<double>(rep.n_type[0]) ==
              doctest::Approx(rep.cross_mean[1][0] * static_cast<double>(rep.n_type[1])));
        // CCDFs non-increasing, fraction at k=1 at most 1
        for (int i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j + 1 < rep.ccdf[i].size(); ++j)
                CHECK(rep.ccdf[i][j].fraction_ge >= rep.ccdf[i][j + 1].fraction_ge);
            if (!rep.ccdf[i].empty()) CHECK(rep.ccdf[i][0].fraction_ge <= 1.0);
        }
    }
}

TEST_CASE("fit_tail_exponent") {
    SUBCASE("exact synthetic power law") {
        const CcdfTable t = synthetic_power_ccdf(2.0, 10000);
        const ExponentFit fit = fit_tail_exponent(t, 1, 10000);
        CHECK(std::abs(fit.gamma_hat - 2.0) < 1e-9);
        CHECK(fit.r_squared > 1.0 - 1e-12);
        CHECK(fit.n_points == 10000);
    }
    SUBCASE("scaling the ccdf leaves gamma unchanged") {
        CcdfTable t = synthetic_power_ccdf(1.7, 500);
        const double g0 = fit_tail_exponent(t, 1, 500).gamma_hat;
        for (CcdfEntry& e : t) e.fraction_ge *= 37.5;
        CHECK(fit_tail_exponent(t, 1, 500).gamma_hat == doctest::Approx(g0).epsilon(1e-12));
    }
    SUBCASE("insufficient data throws") {
        const CcdfTable t = synthetic_power_ccdf(2.0, 4);
        CHECK_THROWS_AS(fit_tail_exponent(t, 1, 100), InsufficientData);
    }
    SUBCASE("default window picks the last k with enough mass") {
        CcdfTable t;
        t.push_back({1, 1000, 1.0});
        t.push_back({10, 300, 0.3});
        t.push_back({50, 50, 0.05});
        t.push_back({80, 49, 0.049});
        CHECK(default_fit_kmax(t, 50) == 50);
    }
}

TEST_CASE("giant_fraction_fixed_point") {
    CHECK(giant_fraction_fixed_point(0.5) == 0.0);
    CHECK(giant_fraction_fixed_point(1.0) == 0.0);
    const double s = giant_fraction_fixed_point(1.5);
    CHECK(s == doctest::Approx(1.0 - std::exp(-1.5 * s)).epsilon(1e-12));
    CHECK(s == doctest::Approx(0.5828).epsilon(2e-4));
    const double s25 = giant_fraction_fixed_point(2.5);
    CHECK(s25 == doctest::Approx(1.0 - std::exp(-2.5 * s25)).epsilon(1e-12));
}

TEST_CASE("ER symmetric largest component matches the fixed-point oracle") {
    // Symmetric two-type case collapses to one-type ER(1.5).
    const double target = giant_fraction_fixed_point(1.5);
    double frac = 0.0;
    const int reps = 30;
    for (int r = 0; r < reps; ++r) {
        RngStream rng(206, static_cast<std::uint64_t>(r));
        const double a1 = er_alpha_from_mean(0.5, 1.5, 0.6, VertexType::Type1);
        const double a2 = er_alpha_from_mean(0.5, 1.5, 0.6, VertexType::Type2);
        frac += components(generate_er(10000, {0.5, a1, a2, 0.6}, rng)).largest_fraction;
    }
    CHECK(std::abs(frac / reps - target) < 0.02);
}
