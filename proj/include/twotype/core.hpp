#pragma once

#include <cstdint>
#include <vector>

namespace twotype {

enum class VertexType : std::uint8_t { Type1 = 0, Type2 = 1 };

constexpr VertexType complement(VertexType t) {
    return t == VertexType::Type1 ? VertexType::Type2 : VertexType::Type1;
}

// Array index (0/1) for per-type tables.
constexpr int type_index(VertexType t) { return t == VertexType::Type1 ? 0 : 1; }

// Display label (1/2) used in files and printed tables.
constexpr int type_label(VertexType t) { return t == VertexType::Type1 ? 1 : 2; }

struct Edge {
    std::uint32_t u;
    std::uint32_t v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Vertex-typed (multi)graph. Vertex ids are dense 0..n-1 in creation order;
// edges are unordered pairs, self-loops and repeated pairs permitted when
// `multigraph` is set (configuration-model output).
struct TypedGraph {
    std::uint64_t n = 0;
    std::vector<VertexType> types;
    std::vector<Edge> edges;
    bool multigraph = false;

    std::uint64_t num_vertices() const { return n; }
    std::uint64_t num_edges() const { return edges.size(); }

    // Throws std::invalid_argument if an edge endpoint is out of range or the
    // type vector has the wrong length.
    void validate() const;
};

// Per-vertex degree breakdown. A self-loop contributes 2 to the total and to
// the own-type count, so that sum(total) == 2 * num_edges always holds.
struct VertexDegrees {
    std::vector<std::uint32_t> total;
    std::vector<std::uint32_t> to_type1;
    std::vector<std::uint32_t> to_type2;

    std::size_t size() const { return total.size(); }
    std::uint32_t to_type(std::size_t v, VertexType t) const {
        return t == VertexType::Type1 ? to_type1[v] : to_type2[v];
    }
};

VertexDegrees total_and_per_type_degrees(const TypedGraph& g);

} // namespace twotype
