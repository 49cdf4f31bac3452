#pragma once

#include "zf/clutter.hpp"
#include "zf/forcing.hpp"
#include "zf/hypergraph.hpp"

namespace zf {

/// Default ceiling on the ground set size for the exhaustive family scans.
/// The environment variable ZF_SEARCH_BOUND overrides it per process.
inline constexpr int kDefaultSearchBound = 12;
int search_bound();

struct FamilyOptions {
    int bound = 0; // 0: use search_bound()
    int jobs = 1;  // worker threads for the subset scans; results are
                   // deterministic and independent of this value
};

/// The clutter of inclusion-minimal forcing sets, by size-ascending subset
/// scan. Supersets of recorded minimal sets are pruned, which is sound
/// because forcing sets are upward closed. Throws SearchBoundExceeded when
/// n exceeds the bound, RuleNotApplicable for R0 on a non-graph.
Clutter minimal_forcing_family(const Hypergraph& h, Rule rule, FamilyOptions opt = {});

/// The clutter of inclusion-minimal immune sets, computed as the blocker of
/// minimal_forcing_family. Immune sets are not upward closed, so no pruned
/// scan applies; the duality is the efficient route.
Clutter minimal_immune_family(const Hypergraph& h, Rule rule, FamilyOptions opt = {});

/// Independent recomputation of the minimal immune family by testing every
/// nonempty subset and minimizing. Exponential; meant as a cross-check.
Clutter minimal_immune_family_direct(const Hypergraph& h, Rule rule, FamilyOptions opt = {});

/// Checks the blocker duality on h for the given rule, with the immune side
/// recomputed directly: Tr(F) == I and Tr(I) == F.
bool verify_duality(const Hypergraph& h, Rule rule, FamilyOptions opt = {});

} // namespace zf
