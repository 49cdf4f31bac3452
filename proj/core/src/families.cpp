#include "zf/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "zf/errors.hpp"

namespace zf {

int search_bound() {
    if (const char* env = std::getenv("ZF_SEARCH_BOUND")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return kDefaultSearchBound;
}

namespace {

int effective_bound(const FamilyOptions& opt) {
    return opt.bound > 0 ? opt.bound : search_bound();
}

void require_within_bound(const Hypergraph& h, const FamilyOptions& opt) {
    const int bound = std::min(effective_bound(opt), 63);
    if (h.n() > bound)
        throw SearchBoundExceeded("family scan over n = " + std::to_string(h.n()) +
                                  " refused; bound is " + std::to_string(bound) +
                                  " (override with ZF_SEARCH_BOUND)");
}

/// Applies `test` to every mask in `masks`, striding the range over
/// opt.jobs threads, and returns the accepted masks in increasing order.
/// Deterministic regardless of the thread count.
std::vector<std::uint64_t> parallel_filter(const std::vector<std::uint64_t>& masks,
                                           int jobs,
                                           const std::function<bool(std::uint64_t)>& test) {
    const int workers = std::max(1, jobs);
    if (workers == 1 || masks.size() < 64) {
        std::vector<std::uint64_t> hits;
        for (std::uint64_t m : masks)
            if (test(m)) hits.push_back(m);
        return hits;
    }

    std::vector<std::vector<std::uint64_t>> per_worker(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < masks.size(); i += workers)
                if (test(masks[i])) per_worker[w].push_back(masks[i]);
        });
    }
    for (auto& t : pool) t.join();

    std::vector<std::uint64_t> hits;
    for (const auto& part : per_worker) hits.insert(hits.end(), part.begin(), part.end());
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<std::uint64_t> subsets_of_size(int n, int k) {
    std::vector<std::uint64_t> masks;
    std::uint64_t mask = (1ULL << k) - 1;
    const std::uint64_t last = mask << (n - k);
    for (;;) {
        masks.push_back(mask);
        if (mask == last) break;
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return masks;
}

} // namespace

Clutter minimal_forcing_family(const Hypergraph& h, Rule rule, FamilyOptions opt) {
    require_within_bound(h, opt);
    if (rule == Rule::R0 && !h.is_graph())
        throw RuleNotApplicable("the graph rule needs every edge to have size 2");

    const int n = h.n();
    const VertexSet omega = h.ground_set();
    std::vector<VertexSet> minimal;

    for (int k = 1; k <= n; ++k) {
        const auto candidates = subsets_of_size(n, k);
        // Forcing sets are upward closed, so any candidate containing an
        // already-found minimal set is forcing but not minimal: skip it.
        // Sets found at the same size are incomparable.
        const auto hits = parallel_filter(candidates, opt.jobs, [&](std::uint64_t mask) {
            const VertexSet candidate = VertexSet::from_bits(mask);
            for (VertexSet found : minimal)
                if (found.subset_of(candidate)) return false;
            return closure_set(h, rule, candidate) == omega;
        });
        for (std::uint64_t mask : hits) minimal.push_back(VertexSet::from_bits(mask));
    }

    std::sort(minimal.begin(), minimal.end(), edge_less);
    return Clutter{n, std::move(minimal)};
}

Clutter minimal_immune_family(const Hypergraph& h, Rule rule, FamilyOptions opt) {
    return transversal(minimal_forcing_family(h, rule, opt));
}

Clutter minimal_immune_family_direct(const Hypergraph& h, Rule rule, FamilyOptions opt) {
    require_within_bound(h, opt);
    if (rule == Rule::R0 && !h.is_graph())
        throw RuleNotApplicable("the graph rule needs every edge to have size 2");

    const int n = h.n();
    std::vector<std::uint64_t> candidates;
    candidates.reserve((1ULL << n) - 1);
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) candidates.push_back(mask);

    // Immune sets are not upward closed, so every nonempty subset is tested.
    const auto hits = parallel_filter(candidates, opt.jobs, [&](std::uint64_t mask) {
        return is_immune(h, rule, VertexSet::from_bits(mask));
    });

    std::vector<VertexSet> immune;
    immune.reserve(hits.size());
    for (std::uint64_t mask : hits) immune.push_back(VertexSet::from_bits(mask));
    return minimize(n, immune);
}

bool verify_duality(const Hypergraph& h, Rule rule, FamilyOptions opt) {
    const Clutter forcing = minimal_forcing_family(h, rule, opt);
    const Clutter immune = minimal_immune_family_direct(h, rule, opt);
    return transversal(forcing) == immune && transversal(immune) == forcing;
}

} // namespace zf
