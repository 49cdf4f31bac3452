#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zf/clutter.hpp"
#include "zf/hypergraph.hpp"

namespace zf {

/// Enumeration cap: the class census works on subset bitmask families, and
/// the orbit bookkeeping is sized for at most 2^6 - 1 candidate edges.
inline constexpr int kCatalogBound = 6;

/// Position of an isomorphism class in the catalog: ground set size n and a
/// 1-based rank j within that size.
struct CatalogIndex {
    int n = 0;
    int j = 0;

    auto operator<=>(const CatalogIndex&) const = default;
    std::string to_string() const { return std::to_string(n) + "," + std::to_string(j); }
};

/// One isomorphism class of covering clutters together with its four dual
/// families and the classes those families fall into. Families live on the
/// ground set of `hypergraph`; `f1_class` etc. name the catalog class of the
/// family viewed as a hypergraph on its own support.
struct CatalogEntry {
    CatalogIndex index;
    Hypergraph hypergraph; // canonical representative
    Clutter f1, f2, i1, i2;
    CatalogIndex f1_class, f2_class, i1_class, i2_class;
};

/// All covering clutters on {1,...,n} up to isomorphism (every vertex lies in
/// an edge), as canonical representatives sorted by edge_list_less. Every
/// labeled covering antichain is generated once by DFS over canonical edge
/// indices; a permutation-orbit seen-set keeps one representative per class.
/// Throws GroundSetTooLarge for n > kCatalogBound.
std::vector<Hypergraph> enumerate_covering_clutters(int n);

/// All graphs on {1,...,n} up to isomorphism, isolated vertices and the
/// edgeless graph included. Same bound and ordering as above.
std::vector<Hypergraph> enumerate_graphs(int n);

/// The family census for all ground set sizes 1..n_max: every covering
/// clutter class with its minimal forcing and immune families under both
/// hypergraph rules, and the classes of those families.
class Table1 {
public:
    const std::vector<CatalogEntry>& entries() const { return entries_; }

    /// Entry lookup by catalog index.
    const CatalogEntry& at(CatalogIndex idx) const;

    /// Class of a family: restrict to its support, relabel order-preserving
    /// to {1,...,s}, canonicalize, look up. Families of catalog entries are
    /// covering clutters of their support, so lookup succeeds for them;
    /// nullopt when the class is outside the table.
    std::optional<CatalogIndex> find_class(const Clutter& family) const;

private:
    friend Table1 build_table1(int n_max, int jobs);

    std::vector<CatalogEntry> entries_;
    std::map<std::pair<int, std::vector<std::uint64_t>>, CatalogIndex> class_of_;
};

Table1 build_table1(int n_max, int jobs = 1);

/// Reverse view of the census: for each class delta, the classes whose
/// families fall in delta. Lists are sorted by catalog index; a class with no
/// realization gets an empty list.
struct Table2Row {
    CatalogIndex delta;
    std::vector<CatalogIndex> f1_realizations;
    std::vector<CatalogIndex> f2_realizations;
    std::vector<CatalogIndex> i1_realizations;
    std::vector<CatalogIndex> i2_realizations;
};

std::vector<Table2Row> build_table2(const Table1& table1);
std::vector<Table2Row> build_table2(int n_max, int jobs = 1);

} // namespace zf
