#pragma once

#include <vector>

#include "zf/hypergraph.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

/// Hard cap for the factorial canonicalization below. Exhaustive over all n!
/// relabelings; beyond 10 vertices that is no longer reasonable.
inline constexpr int kCanonicalBound = 10;

/// Lexicographically smallest relabeling of `edges` under all permutations of
/// {1,...,n}, each candidate sorted canonically and candidate lists compared
/// entry by entry with edge_less. Members may be empty (clutters allow that);
/// the empty set is fixed by every permutation. Throws GroundSetTooLarge when
/// n exceeds `max_n`.
std::vector<VertexSet> canonical_edge_list(int n, const std::vector<VertexSet>& edges,
                                           int max_n = kCanonicalBound);

/// Canonical representative of the isomorphism class of h. Idempotent:
/// canonical_form(canonical_form(h)) == canonical_form(h).
Hypergraph canonical_form(const Hypergraph& h, int max_n = kCanonicalBound);

/// True when some bijection of the ground sets maps the edges of a onto the
/// edges of b. Hypergraphs on different ground set sizes are never isomorphic.
bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, int max_n = kCanonicalBound);

/// Strict total order on hypergraphs of equal n by their edge lists
/// (shorter list first, then entrywise edge_less). Used to fix catalog order.
bool edge_list_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b);

} // namespace zf
