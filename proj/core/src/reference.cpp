#include "zf/reference.hpp"

#include <algorithm>
#include <map>

#include "zf/canonical.hpp"
#include "zf/errors.hpp"

namespace zf::reference {

namespace {

using IL = std::vector<CatalogIndex>;

// Published census on n <= 4: 1 + 2 + 5 + 20 classes. Edge lists are quoted
// verbatim; the family columns give published labels.
const std::vector<CensusRow> kCensus = {
    {{1, 1}, {{1}}, {1, 1}, {1, 1}, {1, 1}, {1, 1}},

    {{2, 1}, {{1, 2}}, {2, 2}, {2, 2}, {2, 1}, {2, 1}},
    {{2, 2}, {{1}, {2}}, {2, 1}, {2, 1}, {2, 2}, {2, 2}},

    {{3, 1}, {{1, 2, 3}}, {3, 5}, {3, 5}, {3, 1}, {3, 1}},
    {{3, 2}, {{1, 2}, {1, 3}, {2, 3}}, {3, 2}, {3, 2}, {3, 2}, {3, 2}},
    {{3, 3}, {{1, 2}, {1, 3}}, {2, 2}, {2, 2}, {2, 1}, {2, 1}},
    {{3, 4}, {{1, 2}, {3}}, {3, 3}, {3, 3}, {3, 4}, {3, 4}},
    {{3, 5}, {{1}, {2}, {3}}, {3, 1}, {3, 1}, {3, 5}, {3, 5}},

    {{4, 1}, {{1, 2, 3, 4}}, {4, 20}, {4, 20}, {4, 1}, {4, 1}},
    {{4, 2}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, {4, 10}, {4, 2}, {4, 2}, {4, 10}},
    {{4, 3}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}, {4, 10}, {3, 2}, {4, 2}, {3, 2}},
    {{4, 4}, {{1, 2, 3}, {1, 2, 4}}, {2, 2}, {2, 2}, {2, 1}, {2, 1}},
    {{4, 5}, {{1, 2, 3}, {1, 2, 4}, {3, 4}}, {4, 11}, {4, 11}, {4, 5}, {4, 5}},
    {{4, 6}, {{1, 2, 3}, {1, 4}}, {3, 5}, {3, 5}, {3, 1}, {3, 1}},
    {{4, 7}, {{1, 2, 3}, {1, 4}, {2, 4}}, {4, 16}, {4, 16}, {4, 3}, {4, 3}},
    {{4, 8}, {{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}}, {4, 10}, {4, 10}, {4, 2}, {4, 2}},
    {{4, 9}, {{1, 2, 3}, {4}}, {4, 14}, {4, 14}, {4, 9}, {4, 9}},
    {{4, 10}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, {4, 2}, {4, 2}, {4, 10}, {4, 10}},
    {{4, 11}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, {4, 13}, {4, 13}, {4, 17}, {4, 17}},
    {{4, 12}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}, {4, 11}, {4, 11}, {4, 5}, {4, 5}},
    {{4, 13}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}, {4, 13}, {4, 13}, {4, 17}, {4, 17}},
    {{4, 14}, {{1, 2}, {1, 3}, {1, 4}}, {3, 2}, {3, 2}, {3, 2}, {3, 2}},
    {{4, 15}, {{1, 2}, {1, 3}, {2, 4}}, {4, 19}, {4, 19}, {4, 4}, {4, 4}},
    {{4, 16}, {{1, 2}, {1, 3}, {2, 3}, {4}}, {4, 3}, {4, 3}, {4, 16}, {4, 16}},
    {{4, 17}, {{1, 2}, {3, 4}}, {4, 13}, {4, 13}, {4, 17}, {4, 17}},
    {{4, 18}, {{1, 2}, {1, 3}, {4}}, {3, 3}, {3, 3}, {3, 4}, {3, 4}},
    {{4, 19}, {{1, 2}, {3}, {4}}, {4, 4}, {4, 4}, {4, 19}, {4, 19}},
    {{4, 20}, {{1}, {2}, {3}, {4}}, {4, 1}, {4, 1}, {4, 20}, {4, 20}},
};

const std::vector<RealizationRow> kRealizations = {
    {{1, 1}, IL{{1, 1}}, IL{{1, 1}}, IL{{1, 1}}, IL{{1, 1}}},

    {{2, 1}, IL{{2, 2}}, IL{{2, 2}}, IL{{2, 1}, {3, 3}, {4, 4}}, IL{{2, 1}, {3, 3}, {4, 4}}},
    {{2, 2}, IL{{2, 1}, {3, 3}, {4, 4}}, IL{{2, 1}, {3, 3}, {4, 4}}, IL{{2, 2}}, IL{{2, 2}}},

    {{3, 1}, IL{{3, 5}}, IL{{3, 5}}, IL{{3, 1}, {4, 6}}, IL{{3, 1}, {4, 6}}},
    {{3, 2}, IL{{3, 2}, {4, 14}}, IL{{3, 2}, {4, 3}, {4, 14}}, IL{{3, 2}, {4, 14}},
     IL{{3, 2}, {4, 3}, {4, 14}}},
    {{3, 3}, IL{{3, 4}, {4, 18}}, IL{{3, 4}, {4, 18}}, IL{}, IL{}},
    {{3, 4}, IL{}, IL{}, IL{{3, 4}, {4, 18}}, IL{{3, 4}, {4, 18}}},
    {{3, 5}, IL{{3, 1}, {4, 6}}, IL{{3, 1}, {4, 6}}, IL{{3, 5}}, IL{{3, 5}}},

    {{4, 1}, IL{{4, 20}}, IL{{4, 20}}, IL{{4, 1}}, IL{{4, 1}}},
    {{4, 2}, IL{{4, 10}}, IL{{4, 2}, {4, 10}}, IL{{4, 2}, {4, 3}, {4, 8}}, IL{{4, 8}}},
    {{4, 3}, IL{{4, 16}}, IL{{4, 16}}, IL{{4, 7}}, IL{{4, 7}}},
    {{4, 4}, IL{{4, 19}}, IL{{4, 19}}, IL{{4, 15}}, IL{{4, 15}}},
    {{4, 5}, IL{}, IL{}, IL{{4, 5}, {4, 12}}, IL{{4, 5}, {4, 12}}},
    {{4, 6}, IL{}, IL{}, IL{}, IL{}},
    {{4, 7}, IL{}, IL{}, IL{}, IL{}},
    {{4, 8}, IL{}, IL{}, IL{}, IL{}},
    {{4, 9}, IL{}, IL{}, IL{{4, 9}}, IL{{4, 9}}},
    {{4, 10}, IL{{4, 2}, {4, 3}, {4, 8}}, IL{{4, 8}}, IL{{4, 10}}, IL{{4, 2}, {4, 10}}},
    {{4, 11}, IL{{4, 5}, {4, 12}}, IL{{4, 5}, {4, 12}}, IL{}, IL{}},
    {{4, 12}, IL{}, IL{}, IL{}, IL{}},
    {{4, 13}, IL{{4, 11}, {4, 13}, {4, 17}}, IL{{4, 11}, {4, 13}, {4, 17}}, IL{}, IL{}},
    {{4, 14}, IL{{4, 9}}, IL{{4, 9}}, IL{}, IL{}},
    {{4, 15}, IL{}, IL{}, IL{}, IL{}},
    {{4, 16}, IL{{4, 7}}, IL{{4, 7}}, IL{{4, 16}}, IL{{4, 16}}},
    {{4, 17}, IL{}, IL{}, IL{{4, 11}, {4, 13}, {4, 17}}, IL{{4, 11}, {4, 13}, {4, 17}}},
    {{4, 18}, IL{}, IL{}, IL{}, IL{}},
    {{4, 19}, IL{{4, 15}}, IL{{4, 15}}, IL{{4, 19}}, IL{{4, 19}}},
    {{4, 20}, IL{{4, 1}}, IL{{4, 1}}, IL{{4, 20}}, IL{{4, 20}}},
};

std::string index_list(const IL& list) {
    if (list.empty()) return "-";
    std::string out;
    for (const CatalogIndex& idx : list) {
        if (!out.empty()) out += ' ';
        out += idx.to_string();
    }
    return out;
}

} // namespace

const std::vector<CensusRow>& census_rows() { return kCensus; }
const std::vector<RealizationRow>& realization_rows() { return kRealizations; }

bool MatchReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const MatchLine& l) { return l.pass; });
}

MatchReport match_census(const Table1& table1, const std::vector<Table2Row>& table2) {
    MatchReport report;

    // Published labels and generated ranks may differ, so build the
    // isomorphism bijection first: each published edge list is canonicalized
    // and located among the generated representatives.
    std::map<CatalogIndex, CatalogIndex> to_generated;
    std::map<CatalogIndex, const CatalogEntry*> generated_at;
    std::map<int, int> generated_per_n, published_per_n;
    for (const CatalogEntry& e : table1.entries()) {
        generated_at[e.index] = &e;
        if (e.index.n <= 4) ++generated_per_n[e.index.n];
    }

    for (const CensusRow& row : kCensus) {
        ++published_per_n[row.id.n];
        std::vector<VertexSet> edges;
        for (const auto& e : row.edges) edges.push_back(VertexSet::from_members(e));
        const Hypergraph canon =
            canonical_form(Hypergraph::validate(row.id.n, std::move(edges)));
        for (const CatalogEntry& e : table1.entries()) {
            if (e.index.n == row.id.n && e.hypergraph == canon) {
                to_generated[row.id] = e.index;
                break;
            }
        }
        if (!to_generated.contains(row.id))
            report.lines.push_back({"census " + row.id.to_string(), false,
                                    "no generated class matches the published edges"});
    }

    {
        const bool sizes_match = generated_per_n == published_per_n;
        const bool injective = [&] {
            std::map<CatalogIndex, int> hits;
            for (const auto& [pub, gen] : to_generated)
                if (++hits[gen] > 1) return false;
            return true;
        }();
        report.lines.push_back({"census bijection", sizes_match && injective,
                                sizes_match && injective
                                    ? ""
                                    : "class counts per ground set size disagree or two "
                                      "published classes map to one generated class"});
    }
    if (!report.all_pass()) return report; // bijection is the premise of the rest

    const auto mapped = [&](CatalogIndex pub) { return to_generated.at(pub); };

    for (const CensusRow& row : kCensus) {
        const CatalogEntry& e = *generated_at.at(mapped(row.id));
        std::string detail;
        const auto expect = [&](const char* what, CatalogIndex pub, CatalogIndex got) {
            if (mapped(pub) != got) {
                if (!detail.empty()) detail += "; ";
                detail += std::string(what) + " is class " + got.to_string() +
                          ", published " + mapped(pub).to_string();
            }
        };
        expect("F1", row.f1, e.f1_class);
        expect("F2", row.f2, e.f2_class);
        expect("I1", row.i1, e.i1_class);
        expect("I2", row.i2, e.i2_class);
        report.lines.push_back({"families " + row.id.to_string(), detail.empty(), detail});
    }

    std::map<CatalogIndex, const Table2Row*> row_at;
    for (const Table2Row& r : table2) row_at[r.delta] = &r;

    for (const RealizationRow& row : kRealizations) {
        const auto it = row_at.find(mapped(row.id));
        if (it == row_at.end()) {
            report.lines.push_back(
                {"realizations " + row.id.to_string(), false, "row missing from the table"});
            continue;
        }
        const Table2Row& got = *it->second;
        std::string detail;
        const auto expect = [&](const char* what, const IL& pub, const IL& got_list) {
            IL translated;
            for (CatalogIndex idx : pub) translated.push_back(mapped(idx));
            std::sort(translated.begin(), translated.end());
            if (translated != got_list) {
                if (!detail.empty()) detail += "; ";
                detail += std::string(what) + " realizations are [" + index_list(got_list) +
                          "], published [" + index_list(translated) + "]";
            }
        };
        expect("F1", row.f1, got.f1_realizations);
        expect("F2", row.f2, got.f2_realizations);
        expect("I1", row.i1, got.i1_realizations);
        expect("I2", row.i2, got.i2_realizations);
        report.lines.push_back({"realizations " + row.id.to_string(), detail.empty(), detail});
    }

    return report;
}

} // namespace zf::reference
