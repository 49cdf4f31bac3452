#include "zf/clutter.hpp"

#include <algorithm>

#include "zf/errors.hpp"

namespace zf {

namespace {

void require_ground_set(int n, const std::vector<VertexSet>& family) {
    if (n < 0) throw OutOfRange("ground set size must be nonnegative, got " + std::to_string(n));
    if (n > VertexSet::kMaxGroundSet)
        throw GroundSetTooLarge("ground set size " + std::to_string(n) + " exceeds " +
                                std::to_string(VertexSet::kMaxGroundSet));
    const VertexSet omega = VertexSet::full(n);
    for (VertexSet m : family)
        if (!m.subset_of(omega))
            throw VertexOutOfRange("member " + m.to_string() + " leaves the ground set {1,...," +
                                   std::to_string(n) + "}");
}

} // namespace

Clutter minimize(int n, const std::vector<VertexSet>& family) {
    require_ground_set(n, family);

    std::vector<VertexSet> sorted = family;
    std::sort(sorted.begin(), sorted.end(), edge_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    // Size-ascending order: a proper subset always comes earlier.
    std::vector<VertexSet> minimal;
    for (VertexSet m : sorted) {
        bool dominated = false;
        for (VertexSet kept : minimal) {
            if (kept.size() >= m.size()) break;
            if (kept.subset_of(m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(m);
    }
    return Clutter{n, std::move(minimal)};
}

Clutter make_clutter(int n, std::vector<VertexSet> members) {
    require_ground_set(n, members);
    for (VertexSet m : members)
        if (m.empty()) throw EmptyMember("clutter members must be nonempty here");

    std::sort(members.begin(), members.end(), edge_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i].subset_of(members[j]))
                throw NotAClutter("member " + members[i].to_string() + " is contained in " +
                                  members[j].to_string());
    return Clutter{n, std::move(members)};
}

Clutter transversal(const Clutter& c) {
    if (c.members.empty()) return Clutter{c.n, {}};
    for (VertexSet m : c.members)
        if (m.empty())
            throw EmptyMember("no set meets the empty set, the transversal is undefined");

    // Incremental product: blockers of the first i members, re-minimized
    // after each member so the intermediate families stay small.
    std::vector<VertexSet> blockers{VertexSet{}};
    for (VertexSet m : c.members) {
        std::vector<VertexSet> next;
        next.reserve(blockers.size());
        for (VertexSet b : blockers) {
            if (b.intersects(m)) {
                next.push_back(b);
            } else {
                for (int v : m.members()) next.push_back(b.with(v));
            }
        }
        blockers = std::move(minimize(c.n, next).members);
    }
    return Clutter{c.n, std::move(blockers)};
}

Clutter uniform(int n, int k) {
    if (n < 1 || n > VertexSet::kMaxGroundSet)
        throw OutOfRange("ground set size " + std::to_string(n) + " is out of range");
    if (k < 1 || k > n)
        throw OutOfRange("uniformity " + std::to_string(k) + " is not in 1.." + std::to_string(n));

    // Gosper's hack, stopping at the top block (the k highest bits) to stay
    // clear of shift overflow at n == 64.
    std::vector<VertexSet> members;
    const std::uint64_t low = k == 64 ? ~0ULL : (1ULL << k) - 1;
    const std::uint64_t last = low << (n - k);
    std::uint64_t mask = low;
    for (;;) {
        members.push_back(VertexSet::from_bits(mask));
        if (mask == last) break;
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    std::sort(members.begin(), members.end(), edge_less);
    return Clutter{n, std::move(members)};
}

std::optional<int> as_uniform(const Clutter& c) {
    if (c.members.empty()) return std::nullopt;
    const int k = c.members.front().size();
    if (k == 0) return std::nullopt;
    for (VertexSet m : c.members)
        if (m.size() != k) return std::nullopt;

    // Distinct k-subsets; equality holds iff the count is C(n, k).
    unsigned __int128 binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * static_cast<unsigned>(c.n - k + i) / i;
    return static_cast<unsigned __int128>(c.members.size()) == binom ? std::optional<int>(k)
                                                                     : std::nullopt;
}

bool isomorphic(const Clutter& a, const Clutter& b, int max_n) {
    if (a.n != b.n || a.members.size() != b.members.size()) return false;
    return canonical_edge_list(a.n, a.members, max_n) ==
           canonical_edge_list(b.n, b.members, max_n);
}

} // namespace zf
