#include "twotype/core.hpp"

#include <stdexcept>
#include <string>

namespace twotype {

void TypedGraph::validate() const {
    if (n > (std::uint64_t{1} << 32))
        throw std::invalid_argument("TypedGraph: vertex ids are 32-bit, n=" + std::to_string(n) +
                                    " is out of range");
    if (types.size() != n)
        throw std::invalid_argument("TypedGraph: types vector has length " +
                                    std::to_string(types.size()) + ", expected n=" + std::to_string(n));
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("TypedGraph: edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") out of range for n=" + std::to_string(n));
    }
}

VertexDegrees total_and_per_type_degrees(const TypedGraph& g) {
    VertexDegrees d;
    d.total.assign(g.n, 0);
    d.to_type1.assign(g.n, 0);
    d.to_type2.assign(g.n, 0);
    for (const Edge& e : g.edges) {
        // For a self-loop both endpoint updates hit the same vertex: +2 total,
        // +2 toward its own type.
        d.total[e.u] += 1;
        d.total[e.v] += 1;
        if (g.types[e.v] == VertexType::Type1) d.to_type1[e.u] += 1; else d.to_type2[e.u] += 1;
        if (g.types[e.u] == VertexType::Type1) d.to_type1[e.v] += 1; else d.to_type2[e.v] += 1;
    }
    return d;
}

} // namespace twotype
