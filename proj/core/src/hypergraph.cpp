#include "zf/hypergraph.hpp"

#include <algorithm>

#include "zf/errors.hpp"

namespace zf {

Hypergraph Hypergraph::validate(int n, std::vector<VertexSet> edges) {
    if (n < 0)
        throw OutOfRange("ground set size must be nonnegative, got " + std::to_string(n));
    if (n > VertexSet::kMaxGroundSet)
        throw GroundSetTooLarge("ground set size " + std::to_string(n) + " exceeds " +
                                std::to_string(VertexSet::kMaxGroundSet));

    const VertexSet omega = VertexSet::full(n);
    for (VertexSet e : edges) {
        if (e.empty()) throw EmptyEdge("hypergraph edges must be nonempty");
        if (!e.subset_of(omega))
            throw VertexOutOfRange("edge " + e.to_string() + " leaves the ground set {1,...," +
                                   std::to_string(n) + "}");
    }

    std::sort(edges.begin(), edges.end(), edge_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // Sorted by size, so containment can only point forward.
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i].subset_of(edges[j]))
                throw NotAClutter("edge " + edges[i].to_string() + " is contained in " +
                                  edges[j].to_string());

    return Hypergraph(n, std::move(edges));
}

bool Hypergraph::is_graph() const {
    for (VertexSet e : edges_)
        if (e.size() != 2) return false;
    return true;
}

bool Hypergraph::has_edge(VertexSet e) const {
    for (VertexSet f : edges_)
        if (f == e) return true;
    return false;
}

bool adjacent(const Hypergraph& h, VertexSet x, VertexSet y) {
    const VertexSet both = x | y;
    for (VertexSet e : h.edges())
        if (both.subset_of(e)) return true;
    return false;
}

std::vector<VertexSet> superedges(const Hypergraph& h, VertexSet b) {
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges())
        if (b.subset_of(e)) out.push_back(e);
    return out;
}

std::vector<VertexSet> open_neighbourhood(const Hypergraph& h, VertexSet b) {
    // b' is a neighbour iff b' == e - b for an edge e containing b, and
    // distinct superedges give distinct differences.
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges())
        if (b.subset_of(e)) out.push_back(e - b);
    std::sort(out.begin(), out.end(), edge_less);
    return out;
}

} // namespace zf
