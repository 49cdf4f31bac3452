#include "zf/constructions.hpp"

#include "zf/clutter.hpp"
#include "zf/errors.hpp"

namespace zf {

namespace {

void require_k_in_range(int n, int k) {
    if (n < 1 || n > VertexSet::kMaxGroundSet)
        throw OutOfRange("ground set size " + std::to_string(n) + " is out of range");
    if (k < 1 || k > n)
        throw OutOfRange("k = " + std::to_string(k) + " is not in 1.." + std::to_string(n));
}

} // namespace

Hypergraph complete_hypergraph(int n, int k) {
    require_k_in_range(n, k);
    return Hypergraph::validate(n, uniform(n, k).members);
}

Hypergraph edgeless_graph(int n) {
    if (n < 1) throw OutOfRange("edgeless graphs need n >= 1");
    return Hypergraph::validate(n, {});
}

Hypergraph complete_graph(int n) {
    if (n < 1) throw OutOfRange("complete graphs need n >= 1");
    if (n == 1) return edgeless_graph(1);
    return complete_hypergraph(n, 2);
}

Hypergraph r1_forcing_realization(int n, int k) {
    require_k_in_range(n, k);
    return complete_hypergraph(n, n - k + 1);
}

Hypergraph r1_immune_realization(int n, int k) {
    require_k_in_range(n, k);
    return complete_hypergraph(n, k);
}

Hypergraph r2_forcing_realization(int n, int k) {
    require_k_in_range(n, k);
    const VertexSet omega = VertexSet::full(n);
    if (k == 1) return Hypergraph::validate(n, {omega});
    if (k == n) return Hypergraph::validate(n, uniform(n, 1).members);

    // Long edge {2,...,n} plus {1} | a for every (k-1)-subset a of {2,...,n}.
    std::vector<VertexSet> edges{omega.without(1)};
    for (VertexSet a : uniform(n, k - 1).members)
        if (!a.contains(1)) edges.push_back(a.with(1));
    return Hypergraph::validate(n, std::move(edges));
}

Hypergraph r2_immune_realization(int n, int k) {
    require_k_in_range(n, k);
    return r2_forcing_realization(n, n - k + 1);
}

Hypergraph graph_forcing_realization(int n, int k) {
    require_k_in_range(n, k);
    if (k == n) return edgeless_graph(n);
    if (k == n - 1) return complete_graph(n);
    throw NotRealizable("no graph has the " + std::to_string(k) +
                        "-uniform clutter as minimal forcing family; only k = n-1 and k = n are realizable");
}

Hypergraph graph_immune_realization(int n, int k) {
    require_k_in_range(n, k);
    if (k == 1) return edgeless_graph(n);
    if (k == 2) return complete_graph(n);
    throw NotRealizable("no graph has the " + std::to_string(k) +
                        "-uniform clutter as minimal immune family; only k = 1 and k = 2 are realizable");
}

} // namespace zf
