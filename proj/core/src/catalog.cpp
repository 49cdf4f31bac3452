#include "zf/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "zf/errors.hpp"
#include "zf/families.hpp"

namespace zf {

namespace {

/// Candidate edge universe for the bitmask census: the eligible subsets of
/// {1,...,n} in canonical order, with one index remap per permutation of the
/// ground set. A family of candidates is a word with bit i for candidate i;
/// n <= 6 keeps every family inside 64 bits.
struct Universe {
    int n = 0;
    std::vector<VertexSet> candidates;
    std::vector<std::vector<int>> perm_maps; // permutation -> candidate index remap

    std::uint64_t apply(const std::vector<int>& map, std::uint64_t family) const {
        std::uint64_t out = 0;
        for (std::uint64_t b = family; b != 0; b &= b - 1)
            out |= 1ULL << map[std::countr_zero(b)];
        return out;
    }
};

Universe make_universe(int n, bool pairs_only) {
    Universe u;
    u.n = n;

    for (std::uint64_t bits = 1; bits < (1ULL << n); ++bits) {
        const VertexSet e = VertexSet::from_bits(bits);
        if (pairs_only && e.size() != 2) continue;
        u.candidates.push_back(e);
    }
    std::sort(u.candidates.begin(), u.candidates.end(), edge_less);

    std::vector<int> index_of(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < u.candidates.size(); ++i)
        index_of[u.candidates[i].bits()] = static_cast<int>(i);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> map(u.candidates.size());
        for (std::size_t i = 0; i < u.candidates.size(); ++i) {
            VertexSet image;
            for (int v : u.candidates[i].members()) image |= VertexSet::single(perm[v - 1]);
            map[i] = index_of[image.bits()];
        }
        u.perm_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return u;
}

std::vector<Hypergraph> finish_census(const Universe& u, std::vector<std::uint64_t> reps) {
    std::vector<Hypergraph> out;
    out.reserve(reps.size());
    for (std::uint64_t family : reps) {
        std::vector<VertexSet> edges;
        for (std::uint64_t b = family; b != 0; b &= b - 1)
            edges.push_back(u.candidates[std::countr_zero(b)]);
        out.push_back(canonical_form(Hypergraph::validate(u.n, std::move(edges))));
    }
    std::sort(out.begin(), out.end(), [](const Hypergraph& a, const Hypergraph& b) {
        return edge_list_less(a.edges(), b.edges());
    });
    return out;
}

void require_catalog_bound(int n) {
    if (n > kCatalogBound)
        throw GroundSetTooLarge("the census enumerates bitmask families; n = " +
                                std::to_string(n) + " exceeds the bound " +
                                std::to_string(kCatalogBound));
    if (n < 0) throw OutOfRange("ground set size must be nonnegative");
}

} // namespace

std::vector<Hypergraph> enumerate_covering_clutters(int n) {
    require_catalog_bound(n);
    if (n == 0) return {};

    const Universe u = make_universe(n, false);
    const int m = static_cast<int>(u.candidates.size());

    // compat[i]: candidates above i that neither contain nor lie inside i.
    std::vector<std::uint64_t> compat(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!u.candidates[i].subset_of(u.candidates[j]) &&
                !u.candidates[j].subset_of(u.candidates[i]))
                compat[i] |= 1ULL << j;

    const VertexSet omega = VertexSet::full(n);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> reps;

    // DFS over index-increasing antichains; every labeled antichain is
    // visited exactly once. A covering family that was not seen yet starts a
    // new class, and marking its whole orbit keeps later relabelings out.
    struct Frame { std::uint64_t family; std::uint64_t allowed; VertexSet covered; };
    std::vector<Frame> stack{{0, (m >= 64 ? ~0ULL : (1ULL << m) - 1), VertexSet{}}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();

        if (f.covered == omega && !seen.contains(f.family)) {
            for (const auto& map : u.perm_maps) seen.insert(u.apply(map, f.family));
            reps.push_back(f.family);
        }
        for (std::uint64_t b = f.allowed; b != 0; b &= b - 1) {
            const int j = std::countr_zero(b);
            const std::uint64_t above = b & (b - 1);
            stack.push_back({f.family | (1ULL << j), above & compat[j],
                             f.covered | u.candidates[j]});
        }
    }
    return finish_census(u, std::move(reps));
}

std::vector<Hypergraph> enumerate_graphs(int n) {
    require_catalog_bound(n);
    if (n == 0) return {Hypergraph::validate(0, {})};

    const Universe u = make_universe(n, true);
    const std::uint64_t families = 1ULL << u.candidates.size();

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> reps;
    for (std::uint64_t family = 0; family < families; ++family) {
        if (seen.contains(family)) continue;
        for (const auto& map : u.perm_maps) seen.insert(u.apply(map, family));
        reps.push_back(family);
    }
    return finish_census(u, std::move(reps));
}

const CatalogEntry& Table1::at(CatalogIndex idx) const {
    for (const CatalogEntry& e : entries_)
        if (e.index == idx) return e;
    throw OutOfRange("no catalog entry " + idx.to_string());
}

std::optional<CatalogIndex> Table1::find_class(const Clutter& family) const {
    VertexSet support;
    for (VertexSet m : family.members) support |= m;
    const int s = support.size();

    // Order-preserving relabel of the support onto {1,...,s}.
    std::vector<int> new_label(family.n + 1, 0);
    int next = 1;
    for (int v = 1; v <= family.n; ++v)
        if (support.contains(v)) new_label[v] = next++;

    std::vector<VertexSet> relabeled;
    relabeled.reserve(family.members.size());
    for (VertexSet m : family.members) {
        VertexSet image;
        for (int v : m.members()) image |= VertexSet::single(new_label[v]);
        relabeled.push_back(image);
    }

    std::vector<std::uint64_t> key_edges;
    for (VertexSet e : canonical_edge_list(s, relabeled)) key_edges.push_back(e.bits());
    const auto it = class_of_.find({s, key_edges});
    if (it == class_of_.end()) return std::nullopt;
    return it->second;
}

Table1 build_table1(int n_max, int jobs) {
    Table1 table;

    for (int n = 1; n <= n_max; ++n) {
        const auto classes = enumerate_covering_clutters(n);
        int j = 1;
        for (const Hypergraph& h : classes) {
            CatalogEntry entry;
            entry.index = {n, j++};
            entry.hypergraph = h;
            table.entries_.push_back(std::move(entry));
        }
    }

    // Register classes before computing families so find_class sees the
    // whole catalog, then fill in the four families per entry.
    for (const CatalogEntry& e : table.entries_) {
        std::vector<std::uint64_t> key_edges;
        for (VertexSet edge : e.hypergraph.edges()) key_edges.push_back(edge.bits());
        table.class_of_[{e.hypergraph.n(), key_edges}] = e.index;
    }

    const int workers = std::max(1, jobs);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= table.entries_.size()) break;
            CatalogEntry& e = table.entries_[i];
            e.f1 = minimal_forcing_family(e.hypergraph, Rule::R1);
            e.f2 = minimal_forcing_family(e.hypergraph, Rule::R2);
            e.i1 = transversal(e.f1);
            e.i2 = transversal(e.f2);
        }
    };
    if (workers == 1) {
        work();
    } else {
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (CatalogEntry& e : table.entries_) {
        const auto resolve = [&](const Clutter& family) {
            const auto found = table.find_class(family);
            if (!found)
                throw OutOfRange("family of " + e.index.to_string() +
                                 " falls outside the catalog");
            return *found;
        };
        e.f1_class = resolve(e.f1);
        e.f2_class = resolve(e.f2);
        e.i1_class = resolve(e.i1);
        e.i2_class = resolve(e.i2);
    }
    return table;
}

std::vector<Table2Row> build_table2(const Table1& table1) {
    std::vector<Table2Row> rows;
    rows.reserve(table1.entries().size());
    std::map<CatalogIndex, std::size_t> position;
    for (const CatalogEntry& e : table1.entries()) {
        position[e.index] = rows.size();
        rows.push_back({e.index, {}, {}, {}, {}});
    }
    const auto row_of = [&](CatalogIndex idx) -> Table2Row& { return rows[position.at(idx)]; };

    // Entries are scanned in index order, so the lists come out sorted.
    for (const CatalogEntry& e : table1.entries()) {
        row_of(e.f1_class).f1_realizations.push_back(e.index);
        row_of(e.f2_class).f2_realizations.push_back(e.index);
        row_of(e.i1_class).i1_realizations.push_back(e.index);
        row_of(e.i2_class).i2_realizations.push_back(e.index);
    }
    return rows;
}

std::vector<Table2Row> build_table2(int n_max, int jobs) {
    const Table1 table1 = build_table1(n_max, jobs);
    return build_table2(table1);
}

} // namespace zf
