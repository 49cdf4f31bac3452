#include "zf/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "zf/errors.hpp"

namespace zf {

namespace {

VertexSet relabel(VertexSet e, const std::vector<int>& perm) {
    VertexSet out;
    for (std::uint64_t b = e.bits(); b != 0; b &= b - 1)
        out |= VertexSet::single(perm[std::countr_zero(b)]);
    return out;
}

} // namespace

bool edge_list_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (edge_less(a[i], b[i])) return true;
        if (edge_less(b[i], a[i])) return false;
    }
    return false;
}

std::vector<VertexSet> canonical_edge_list(int n, const std::vector<VertexSet>& edges,
                                           int max_n) {
    if (n > max_n)
        throw GroundSetTooLarge("canonicalization is exhaustive over permutations; n = " +
                                std::to_string(n) + " exceeds the bound " +
                                std::to_string(max_n));
    if (edges.empty()) return {};

    std::vector<int> perm(n); // perm[v-1] is the new label of vertex v
    std::iota(perm.begin(), perm.end(), 1);

    std::vector<VertexSet> best, cur(edges.size());
    bool first = true;
    do {
        for (std::size_t i = 0; i < edges.size(); ++i) cur[i] = relabel(edges[i], perm);
        std::sort(cur.begin(), cur.end(), edge_less);
        if (first || edge_list_less(cur, best)) {
            best = cur;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Hypergraph canonical_form(const Hypergraph& h, int max_n) {
    return Hypergraph::validate(h.n(), canonical_edge_list(h.n(), h.edges(), max_n));
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, int max_n) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_edge_list(a.n(), a.edges(), max_n) ==
           canonical_edge_list(b.n(), b.edges(), max_n);
}

} // namespace zf
