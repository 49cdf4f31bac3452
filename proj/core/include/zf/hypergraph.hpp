#pragma once

#include <cstddef>
#include <vector>

#include "zf/vertex_set.hpp"

namespace zf {

/// A hypergraph: ground set {1,...,n} together with an antichain of nonempty
/// edges (no edge contains another), stored in canonical order
/// (size-ascending, then lexicographic). Instances are immutable and can only
/// be built through `validate`, so the invariants always hold. An empty edge
/// list is permitted; a graph is the special case where every edge has
/// exactly two vertices.
class Hypergraph {
public:
    /// The empty hypergraph on an empty ground set.
    Hypergraph() = default;

    /// Normalizes (sorts, deduplicates) and checks the edge family.
    /// Throws EmptyEdge, VertexOutOfRange, GroundSetTooLarge or NotAClutter.
    static Hypergraph validate(int n, std::vector<VertexSet> edges);

    int n() const { return n_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    VertexSet ground_set() const { return VertexSet::full(n_); }

    /// True when every edge has size 2 (vacuously true without edges).
    bool is_graph() const;

    bool has_edge(VertexSet e) const;

    bool operator==(const Hypergraph&) const = default;

private:
    Hypergraph(int n, std::vector<VertexSet> edges)
        : n_(n), edges_(std::move(edges)) {}

    int n_ = 0;
    std::vector<VertexSet> edges_;
};

/// Two vertex sets are adjacent when some edge contains both.
bool adjacent(const Hypergraph& h, VertexSet x, VertexSet y);

/// Open neighbourhood of b: all sets b' disjoint from b with b|b' an edge.
/// Equivalently {e - b : e an edge containing b}. Canonically ordered.
std::vector<VertexSet> open_neighbourhood(const Hypergraph& h, VertexSet b);

/// All edges containing b, in canonical order.
std::vector<VertexSet> superedges(const Hypergraph& h, VertexSet b);

} // namespace zf
