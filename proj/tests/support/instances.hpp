#pragma once

// Named fixture instances plus deterministic random generators shared by the
// unit and acceptance suites. All randomness is mt19937 with explicit seeds
// and modulo reduction, so runs are reproducible across platforms.

#include <random>
#include <vector>

#include "zf/clutter.hpp"
#include "zf/constructions.hpp"
#include "zf/hypergraph.hpp"

namespace zft {

/// Three triples through vertex 1 on four vertices.
inline zf::Hypergraph three_triples() {
    return zf::Hypergraph::validate(4, {zf::VertexSet::of({1, 2, 3}), zf::VertexSet::of({1, 2, 4}),
                                        zf::VertexSet::of({1, 3, 4})});
}

/// Triangle 1-2-3 with the tail edge 3-4.
inline zf::Hypergraph triangle_with_tail() {
    return zf::Hypergraph::validate(4, {zf::VertexSet::of({1, 2}), zf::VertexSet::of({1, 3}),
                                        zf::VertexSet::of({2, 3}), zf::VertexSet::of({3, 4})});
}

/// An 8-vertex graph with a couple of known forcing sets.
inline zf::Hypergraph sample_graph8() {
    const std::vector<std::pair<int, int>> edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                                    {6, 7}, {7, 8}, {6, 8}, {2, 6}, {2, 4},
                                                    {5, 7}, {1, 3}, {3, 7}};
    std::vector<zf::VertexSet> sets;
    for (auto [a, b] : edges) sets.push_back(zf::VertexSet::of({a, b}));
    return zf::Hypergraph::validate(8, std::move(sets));
}

/// Assorted small instances for exhaustive cross-checks (n <= 5).
inline std::vector<zf::Hypergraph> zoo() {
    using zf::Hypergraph;
    using zf::VertexSet;
    std::vector<Hypergraph> out;
    out.push_back(three_triples());
    out.push_back(triangle_with_tail());
    out.push_back(Hypergraph::validate(1, {VertexSet::of({1})}));
    out.push_back(Hypergraph::validate(3, {VertexSet::of({1, 2, 3})}));
    out.push_back(Hypergraph::validate(3, {VertexSet::of({1}), VertexSet::of({2, 3})}));
    out.push_back(Hypergraph::validate(4, {VertexSet::of({1, 2}), VertexSet::of({3, 4})}));
    out.push_back(Hypergraph::validate(3, {}));
    out.push_back(zf::edgeless_graph(4));
    out.push_back(zf::complete_graph(4));
    out.push_back(zf::complete_graph(5));
    out.push_back(zf::complete_hypergraph(4, 3));
    out.push_back(zf::complete_hypergraph(5, 3));
    out.push_back(zf::r2_forcing_realization(4, 2));
    out.push_back(zf::r2_forcing_realization(5, 3));
    // path and cycle on five vertices, and a star
    out.push_back(Hypergraph::validate(5, {VertexSet::of({1, 2}), VertexSet::of({2, 3}),
                                           VertexSet::of({3, 4}), VertexSet::of({4, 5})}));
    out.push_back(Hypergraph::validate(5, {VertexSet::of({1, 2}), VertexSet::of({2, 3}),
                                           VertexSet::of({3, 4}), VertexSet::of({4, 5}),
                                           VertexSet::of({1, 5})}));
    out.push_back(Hypergraph::validate(5, {VertexSet::of({1, 2}), VertexSet::of({1, 3}),
                                           VertexSet::of({1, 4}), VertexSet::of({1, 5})}));
    return out;
}

inline zf::VertexSet random_subset(std::mt19937& rng, int n) {
    return zf::VertexSet::from_bits(rng() & ((1ULL << n) - 1));
}

inline zf::VertexSet random_nonempty_subset(std::mt19937& rng, int n) {
    return zf::VertexSet::from_bits(1 + rng() % ((1ULL << n) - 1));
}

/// Random clutter-normalized hypergraph with n in [n_min, n_max]. Every
/// vertex set arises via minimize, so the result always validates.
inline zf::Hypergraph random_hypergraph(std::mt19937& rng, int n_min, int n_max) {
    const int n = n_min + static_cast<int>(rng() % (n_max - n_min + 1));
    const int m = 1 + static_cast<int>(rng() % (n + 2));
    std::vector<zf::VertexSet> family;
    for (int i = 0; i < m; ++i) family.push_back(random_nonempty_subset(rng, n));
    return zf::Hypergraph::validate(n, zf::minimize(n, family).members);
}

/// Random graph, possibly with isolated vertices or no edges at all.
inline zf::Hypergraph random_graph(std::mt19937& rng, int n_min, int n_max) {
    const int n = n_min + static_cast<int>(rng() % (n_max - n_min + 1));
    const unsigned density = 1 + rng() % 3; // keep edges with probability density/4
    std::vector<zf::VertexSet> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (rng() % 4 < density) edges.push_back(zf::VertexSet::of({a, b}));
    return zf::Hypergraph::validate(n, std::move(edges));
}

} // namespace zft
