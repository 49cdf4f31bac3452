#pragma once

#include <optional>
#include <vector>

#include "zf/canonical.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

/// An antichain of subsets of {1,...,n} in canonical member order. Unlike a
/// hypergraph edge set, a clutter may be empty and may (as the single member)
/// contain the empty set; only the transversal operator rejects the latter.
struct Clutter {
    int n = 0;
    std::vector<VertexSet> members;

    bool empty() const { return members.empty(); }
    bool operator==(const Clutter&) const = default;
};

/// The inclusion-minimal members of an arbitrary family, deduplicated and
/// canonically ordered. The antichain property holds by construction.
Clutter minimize(int n, const std::vector<VertexSet>& family);

/// Throws NotAClutter (containment between distinct members), EmptyMember,
/// VertexOutOfRange or GroundSetTooLarge instead of normalizing. Empty
/// members are rejected here; use plain Clutter aggregates to carry them.
Clutter make_clutter(int n, std::vector<VertexSet> members);

/// Blocker (transversal clutter): the minimal sets meeting every member.
/// Tr of the empty clutter is empty; a clutter containing the empty set has
/// no transversal and raises EmptyMember. Involution on antichains of
/// nonempty sets: transversal(transversal(c)) == c.
Clutter transversal(const Clutter& c);

/// All k-subsets of {1,...,n}. Throws OutOfRange unless 1 <= k <= n.
Clutter uniform(int n, int k);

/// k when c consists of exactly the k-subsets of its ground set, else nullopt.
std::optional<int> as_uniform(const Clutter& c);

/// Isomorphism of clutters under ground set relabeling.
bool isomorphic(const Clutter& a, const Clutter& b, int max_n = kCanonicalBound);

} // namespace zf
