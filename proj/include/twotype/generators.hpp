#pragma once

#include <cstdint>

#include "twotype/analytic.hpp"
#include "twotype/core.hpp"
#include "twotype/degree_dist.hpp"
#include "twotype/rng.hpp"

namespace twotype {

// Bookkeeping from the half-edge pairing: how many half-edges were erased
// (odd own-label pools plus the |L1'-L2'| cross surplus) and how many
// distinct vertices lost at least one half-edge.
struct CmGenReport {
    std::uint64_t erased_halfedges = 0;
    std::uint64_t erased_affected_vertices = 0;
    std::uint64_t labels_own1 = 0;   // L_1
    std::uint64_t labels_cross1 = 0; // L_1'
    std::uint64_t labels_own2 = 0;   // L_2
    std::uint64_t labels_cross2 = 0; // L_2'
};

struct CmResult {
    TypedGraph graph;
    CmGenReport report;
};

// Two-type Erdos-Renyi graph: types i.i.d. with P(Type1) = p1, each same-type
// pair an edge with probability min{alpha_i/n, 1}, each cross pair with
// min{beta/n, 1}, all independently. Geometric skipping within each of the
// three pair classes keeps the expected runtime at O(n + edges).
TypedGraph generate_er(std::uint64_t n, const ErParams& p, RngStream& rng);

// Two-type configuration model: sample types and per-vertex degrees from
// F_i, label each half-edge of a type-i vertex own-type with probability
// xi_i, pair own-label pools uniformly within themselves and the two cross
// pools against each other, erase leftovers. Output is a multigraph
// (self-loops and multi-edges retained).
CmResult generate_cm(std::uint64_t n, double p1, const DegreeDistribution& f1,
                     const DegreeDistribution& f2, double xi1, double xi2, RngStream& rng);

// Two-type preferential attachment: at time 1 one vertex of each type joined
// by an edge; each arrival picks its type (p1), a target type (theta_i), and
// a target vertex of that type proportionally to degree via uniform draws
// from per-type edge-endpoint lists. Final graph: t+1 vertices, t edges,
// connected.
TypedGraph generate_pa(std::uint64_t t, const PaParams& p, RngStream& rng);

} // namespace twotype
