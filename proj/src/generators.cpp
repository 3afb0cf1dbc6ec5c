#include "twotype/generators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace twotype {

namespace {

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 32;

// Walks the pairs (list[a], list[j]) with a < j (or the full grid when two
// distinct lists are given), skipping geometrically so only realized edges
// cost time. prob is the per-pair edge probability.
void add_class_edges(std::vector<Edge>& edges, const std::vector<std::uint32_t>& rows,
                     const std::vector<std::uint32_t>& cols, bool triangular, double prob,
                     RngStream& rng) {
    if (prob <= 0.0) return;
    const double m = static_cast<double>(cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        if (triangular && a + 1 >= cols.size()) break;
        double jpos = triangular ? static_cast<double>(a) : -1.0;
        for (;;) {
            const double skip = prob >= 1.0 ? 0.0 : rng.geometric_skip(prob);
            jpos += 1.0 + skip;
            if (jpos >= m) break;
            edges.push_back({rows[a], cols[static_cast<std::size_t>(jpos)]});
        }
    }
}

} // namespace

TypedGraph generate_er(std::uint64_t n, const ErParams& p, RngStream& rng) {
    p.validate();
    if (n < 1) throw std::invalid_argument("generate_er: n must be >= 1");
    if (n > kMaxVertices) throw std::invalid_argument("generate_er: n exceeds the 32-bit id range");
    TypedGraph g;
    g.n = n;
    g.multigraph = false;
    g.types.reserve(n);
    std::vector<std::uint32_t> idx1, idx2;
    for (std::uint64_t v = 0; v < n; ++v) {
        const bool t1 = rng.bernoulli(p.p1);
        g.types.push_back(t1 ? VertexType::Type1 : VertexType::Type2);
        (t1 ? idx1 : idx2).push_back(static_cast<std::uint32_t>(v));
    }
    const double nd = static_cast<double>(n);
    const double p11 = std::min(p.alpha1 / nd, 1.0);
    const double p22 = std::min(p.alpha2 / nd, 1.0);
    const double p12 = std::min(p.beta / nd, 1.0);
    add_class_edges(g.edges, idx1, idx1, true, p11, rng);
    add_class_edges(g.edges, idx2, idx2, true, p22, rng);
    add_class_edges(g.edges, idx1, idx2, false, p12, rng);
    return g;
}

CmResult generate_cm(std::uint64_t n, double p1, const DegreeDistribution& f1,
                     const DegreeDistribution& f2, double xi1, double xi2, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("generate_cm: n must be >= 1");
    if (n > kMaxVertices) throw std::invalid_argument("generate_cm: n exceeds the 32-bit id range");
    if (!(p1 >= 0.0 && p1 <= 1.0)) throw std::invalid_argument("generate_cm: p1 must be in [0,1]");
    if (!(xi1 >= 0.0 && xi1 <= 1.0) || !(xi2 >= 0.0 && xi2 <= 1.0))
        throw std::invalid_argument("generate_cm: xi labels must be probabilities");

    CmResult out;
    TypedGraph& g = out.graph;
    g.n = n;
    g.multigraph = true;
    g.types.reserve(n);

    // own[i]: half-edges labeled i at type-i vertices; cross[i]: labeled i'.
    std::vector<std::uint32_t> own[2], cross[2];
    for (std::uint64_t v = 0; v < n; ++v) {
        const bool t1 = rng.bernoulli(p1);
        g.types.push_back(t1 ? VertexType::Type1 : VertexType::Type2);
        const int ti = t1 ? 0 : 1;
        const std::uint64_t deg = (t1 ? f1 : f2).sample(rng);
        const double xi = t1 ? xi1 : xi2;
        for (std::uint64_t h = 0; h < deg; ++h)
            (rng.bernoulli(xi) ? own[ti] : cross[ti]).push_back(static_cast<std::uint32_t>(v));
    }
    out.report.labels_own1 = own[0].size();
    out.report.labels_own2 = own[1].size();
    out.report.labels_cross1 = cross[0].size();
    out.report.labels_cross2 = cross[1].size();

    std::vector<std::uint32_t> erased;

    // Uniform matching within each own-label pool: shuffle, pair adjacent
    // entries; an odd pool leaves its final (uniformly random) entry unpaired.
    for (int ti = 0; ti < 2; ++ti) {
        auto& pool = own[ti];
        rng.shuffle(pool);
        std::size_t i = 0;
        for (; i + 1 < pool.size(); i += 2) g.edges.push_back({pool[i], pool[i + 1]});
        if (i < pool.size()) erased.push_back(pool[i]);
    }
    // Cross pools are paired positionally after shuffling; the surplus of the
    // longer pool is erased.
    rng.shuffle(cross[0]);
    rng.shuffle(cross[1]);
    const std::size_t paired = std::min(cross[0].size(), cross[1].size());
    for (std::size_t i = 0; i < paired; ++i) g.edges.push_back({cross[0][i], cross[1][i]});
    for (int ti = 0; ti < 2; ++ti)
        for (std::size_t i = paired; i < cross[ti].size(); ++i) erased.push_back(cross[ti][i]);

    out.report.erased_halfedges = erased.size();
    std::sort(erased.begin(), erased.end());
    out.report.erased_affected_vertices =
        static_cast<std::uint64_t>(std::unique(erased.begin(), erased.end()) - erased.begin());
    return out;
}

TypedGraph generate_pa(std::uint64_t t, const PaParams& p, RngStream& rng) {
    p.validate();
    if (t < 1) throw std::invalid_argument("generate_pa: t must be >= 1");
    if (t >= kMaxVertices) throw std::invalid_argument("generate_pa: t exceeds the 32-bit id range");
    TypedGraph g;
    g.n = t + 1;
    g.multigraph = false;
    g.types.reserve(g.n);
    g.edges.reserve(t);
    g.types.push_back(VertexType::Type1);
    g.types.push_back(VertexType::Type2);
    g.edges.push_back({0, 1});

    // endpoints[i] holds one entry per unit of type-i degree, so a uniform
    // draw from it is exactly degree-proportional selection.
    std::vector<std::uint32_t> endpoints[2];
    endpoints[0].reserve(t + 1);
    endpoints[1].reserve(t + 1);
    endpoints[0].push_back(0);
    endpoints[1].push_back(1);

    for (std::uint64_t time = 2; time <= t; ++time) {
        const std::uint32_t id = static_cast<std::uint32_t>(time);
        const bool t1 = rng.bernoulli(p.p1);
        const VertexType vt = t1 ? VertexType::Type1 : VertexType::Type2;
        const double own = t1 ? p.theta1 : p.theta2;
        const VertexType target_type = rng.bernoulli(own) ? vt : complement(vt);
        auto& pool = endpoints[type_index(target_type)];
        // Both seed vertices have degree >= 1 forever, so the pool is never
        // empty.
        assert(!pool.empty());
        const std::uint32_t target = pool[rng.uniform_below(pool.size())];
        g.types.push_back(vt);
        g.edges.push_back({id, target});
        // The arriving edge's endpoints become eligible only after the
        // arrival completes (a new vertex cannot attach to itself).
        endpoints[type_index(vt)].push_back(id);
        endpoints[type_index(target_type)].push_back(target);
    }
    return g;
}

} // namespace twotype
