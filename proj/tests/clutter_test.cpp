#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zf/clutter.hpp"
#include "zf/errors.hpp"

#include "support/instances.hpp"
#include "support/oracles.hpp"

using zf::Clutter;
using zf::VertexSet;

namespace {

/// Every antichain of nonempty subsets of {1,...,n}, including non-covering
/// ones; brute force over mask families, for the small exhaustive checks.
std::vector<Clutter> all_clutters(int n) {
    std::vector<VertexSet> subsets;
    for (std::uint64_t bits = 1; bits < (1ULL << n); ++bits)
        subsets.push_back(VertexSet::from_bits(bits));

    std::vector<Clutter> out;
    for (std::uint64_t family = 0; family < (1ULL << subsets.size()); ++family) {
        std::vector<VertexSet> members;
        for (std::uint64_t b = family; b != 0; b &= b - 1)
            members.push_back(subsets[std::countr_zero(b)]);
        bool antichain = true;
        for (std::size_t i = 0; i < members.size() && antichain; ++i)
            for (std::size_t j = 0; j < members.size() && antichain; ++j)
                if (i != j && members[i].subset_of(members[j])) antichain = false;
        if (antichain) out.push_back(zf::make_clutter(n, members));
    }
    return out;
}

} // namespace

TEST_CASE("minimize keeps exactly the inclusion-minimal members") {
    const Clutter c = zf::minimize(4, {VertexSet::of({1, 2, 3}), VertexSet::of({1, 2}),
                                       VertexSet::of({3}), VertexSet::of({3, 4}),
                                       VertexSet::of({1, 2})});
    CHECK(c.members == std::vector<VertexSet>{VertexSet::of({3}), VertexSet::of({1, 2})});

    std::mt19937 rng(321);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::vector<VertexSet> family;
        const int m = static_cast<int>(rng() % 10);
        for (int i = 0; i < m; ++i) family.push_back(zft::random_subset(rng, n));
        const Clutter got = zf::minimize(n, family);
        CHECK(got.members == zft::oracle_minimal(family));
        CHECK(zf::minimize(n, got.members) == got); // idempotent
    }
}

TEST_CASE("make_clutter rejects containment and empty members") {
    CHECK_THROWS_AS(zf::make_clutter(3, {VertexSet::of({1}), VertexSet::of({1, 2})}),
                    zf::NotAClutter);
    CHECK_THROWS_AS(zf::make_clutter(3, {VertexSet{}}), zf::EmptyMember);
    CHECK_THROWS_AS(zf::make_clutter(2, {VertexSet::of({3})}), zf::VertexOutOfRange);
    CHECK(zf::make_clutter(3, {}).empty());
}

TEST_CASE("transversal on the three-triples families") {
    // minimal forcing family of the three-triples example -> immune family
    const Clutter forcing = zf::make_clutter(
        4, {VertexSet::of({1, 2}), VertexSet::of({1, 3}), VertexSet::of({1, 4}),
            VertexSet::of({2, 3}), VertexSet::of({2, 4}), VertexSet::of({3, 4})});
    const Clutter immune = zf::transversal(forcing);
    CHECK(immune.members ==
          std::vector<VertexSet>{VertexSet::of({1, 2, 3}), VertexSet::of({1, 2, 4}),
                                 VertexSet::of({1, 3, 4}), VertexSet::of({2, 3, 4})});
    CHECK(zf::transversal(immune) == forcing);
}

TEST_CASE("transversal basics") {
    const Clutter c = zf::make_clutter(3, {VertexSet::of({1}), VertexSet::of({2, 3})});
    const Clutter t = zf::transversal(c);
    CHECK(t.members == std::vector<VertexSet>{VertexSet::of({1, 2}), VertexSet::of({1, 3})});

    CHECK(zf::transversal(Clutter{5, {}}) == Clutter{5, {}});
    CHECK_THROWS_AS(zf::transversal(Clutter{3, {VertexSet{}}}), zf::EmptyMember);
}

TEST_CASE("transversal is an involution on every clutter with up to four vertices") {
    for (int n = 1; n <= 4; ++n) {
        for (const Clutter& c : all_clutters(n)) {
            const Clutter t = zf::transversal(c);
            CHECK(t.members == zft::oracle_transversal(n, c.members));
            CHECK(zf::transversal(t) == c);
        }
    }
}

TEST_CASE("transversal members block and are minimal, randomized") {
    std::mt19937 rng(8080);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        std::vector<VertexSet> family;
        const int m = 1 + static_cast<int>(rng() % (n + 2));
        for (int i = 0; i < m; ++i) family.push_back(zft::random_nonempty_subset(rng, n));
        const Clutter c = zf::minimize(n, family);
        const Clutter t = zf::transversal(c);

        CHECK(t.members == zft::oracle_transversal(n, c.members));
        for (VertexSet b : t.members) {
            for (VertexSet m2 : c.members) CHECK(b.intersects(m2));
            // dropping any vertex must break some member
            for (int v : b.members()) {
                bool still_blocks = true;
                for (VertexSet m2 : c.members)
                    if (!b.without(v).intersects(m2)) {
                        still_blocks = false;
                        break;
                    }
                CHECK_FALSE(still_blocks);
            }
        }
        // the transversal only depends on the minimal members
        CHECK(zf::transversal(zf::minimize(n, c.members)) == t);
    }
}

TEST_CASE("uniform clutters and their recognition") {
    const Clutter u = zf::uniform(4, 2);
    CHECK(u.members.size() == 6);
    CHECK(u.members.front() == VertexSet::of({1, 2}));
    CHECK(u.members.back() == VertexSet::of({3, 4}));
    CHECK(zf::as_uniform(u) == 2);

    CHECK(zf::uniform(3, 3).members == std::vector<VertexSet>{VertexSet::full(3)});
    CHECK(zf::as_uniform(Clutter{3, {}}) == std::nullopt);
    CHECK(zf::as_uniform(zf::make_clutter(3, {VertexSet::of({1, 2})})) == std::nullopt);
    CHECK(zf::as_uniform(zf::make_clutter(2, {VertexSet::of({1})})) == std::nullopt);
    CHECK(zf::as_uniform(zf::make_clutter(2, {VertexSet::of({1}), VertexSet::of({2})})) == 1);
    CHECK_THROWS_AS(zf::uniform(3, 4), zf::OutOfRange);
    CHECK_THROWS_AS(zf::uniform(3, 0), zf::OutOfRange);
    CHECK_THROWS_AS(zf::uniform(0, 1), zf::OutOfRange);
}

TEST_CASE("complement duality of uniform clutters") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(zf::transversal(zf::uniform(n, k)) == zf::uniform(n, n - k + 1));
}

TEST_CASE("clutter isomorphism") {
    const Clutter a = zf::make_clutter(3, {VertexSet::of({1, 2}), VertexSet::of({3})});
    const Clutter b = zf::make_clutter(3, {VertexSet::of({2, 3}), VertexSet::of({1})});
    const Clutter c = zf::make_clutter(3, {VertexSet::of({1, 2}), VertexSet::of({1, 3})});
    CHECK(zf::isomorphic(a, b));
    CHECK_FALSE(zf::isomorphic(a, c));
    CHECK(zf::isomorphic(zf::uniform(5, 2), zf::uniform(5, 2)));
    CHECK_FALSE(zf::isomorphic(zf::uniform(5, 2), zf::uniform(5, 3)));
    CHECK_FALSE(zf::isomorphic(a, zf::make_clutter(4, {VertexSet::of({1, 2}), VertexSet::of({3})})));
}
