#pragma once

#include <string>
#include <vector>

#include "zf/catalog.hpp"

namespace zf::reference {

/// Published ground truth for the census on up to four vertices: 28 classes
/// with their family classes, and the reverse realization lists. Indices are
/// the published labels; they need not coincide with the generated ranks, so
/// comparisons go through the isomorphism bijection built by match_census.
struct CensusRow {
    CatalogIndex id;
    std::vector<std::vector<int>> edges;
    CatalogIndex f1, f2, i1, i2;
};

struct RealizationRow {
    CatalogIndex id;
    std::vector<CatalogIndex> f1, f2, i1, i2;
};

const std::vector<CensusRow>& census_rows();
const std::vector<RealizationRow>& realization_rows();

struct MatchLine {
    std::string label;
    bool pass = false;
    std::string detail; // empty on pass
};

struct MatchReport {
    std::vector<MatchLine> lines;
    bool all_pass() const;
};

/// Checks a generated census against the published one: class counts per
/// ground set size, one family line per census row, one realization line per
/// reverse row. The generated table must cover n <= 4.
MatchReport match_census(const Table1& table1, const std::vector<Table2Row>& table2);

} // namespace zf::reference
