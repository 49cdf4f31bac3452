#pragma once

#include "zf/hypergraph.hpp"

namespace zf {

/// The complete k-uniform hypergraph on {1,...,n}: every k-subset is an edge.
/// Throws OutOfRange unless 1 <= k <= n.
Hypergraph complete_hypergraph(int n, int k);

/// Graph with no edges on n >= 0 vertices.
Hypergraph edgeless_graph(int n);

/// Complete graph on n >= 1 vertices (edgeless for n == 1).
Hypergraph complete_graph(int n);

/// Hypergraphs whose minimal forcing (resp. immune) family under the first
/// hypergraph rule is exactly the k-uniform clutter: the complete
/// (n-k+1)-uniform (resp. k-uniform) hypergraph. Throws OutOfRange unless
/// 1 <= k <= n.
Hypergraph r1_forcing_realization(int n, int k);
Hypergraph r1_immune_realization(int n, int k);

/// Same for the second hypergraph rule. For 2 <= k <= n-1 the forcing
/// realization glues the long edge {2,...,n} to all k-subsets through vertex
/// 1: edges {1} | a for every (k-1)-subset a of {2,...,n}. Boundary cases:
/// k == 1 gives the single edge {1,...,n}, k == n gives all singletons.
Hypergraph r2_forcing_realization(int n, int k);

/// Immune counterpart, obtained from the forcing construction at n-k+1.
Hypergraph r2_immune_realization(int n, int k);

/// Graphs realizing the k-uniform clutter as their minimal forcing (resp.
/// immune) family under the graph rule. Only k in {n-1, n} (resp. {1, 2})
/// are realizable; other k throw NotRealizable.
Hypergraph graph_forcing_realization(int n, int k);
Hypergraph graph_immune_realization(int n, int k);

} // namespace zf
