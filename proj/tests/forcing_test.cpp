#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "zf/constructions.hpp"
#include "zf/errors.hpp"
#include "zf/forcing.hpp"

#include "support/instances.hpp"
#include "support/oracles.hpp"

using zf::Hypergraph;
using zf::Rule;
using zf::VertexSet;

TEST_CASE("rule names parse both ways") {
    CHECK(zf::parse_rule("r0") == Rule::R0);
    CHECK(zf::parse_rule("R1") == Rule::R1);
    CHECK(zf::parse_rule("r2") == Rule::R2);
    CHECK(zf::rule_name(Rule::R2) == std::string("r2"));
    CHECK_THROWS_AS(zf::parse_rule("r3"), zf::ParseError);
}

TEST_CASE("fireable steps on the three-triples example") {
    const Hypergraph h = zft::three_triples();
    const VertexSet black = VertexSet::of({1, 2});

    const auto r1 = zf::fireable(h, Rule::R1, black);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].edge == VertexSet::of({1, 3, 4}));
    CHECK(r1[0].trigger == VertexSet::of({1}));

    CHECK(zf::fireable(h, Rule::R2, black).empty());
    CHECK_THROWS_AS(zf::fireable(h, Rule::R0, black), zf::RuleNotApplicable);
}

TEST_CASE("closures of the three-triples example") {
    const Hypergraph h = zft::three_triples();
    const VertexSet black = VertexSet::of({1, 2});

    const auto r1 = zf::closure(h, Rule::R1, black);
    CHECK(r1.black == VertexSet::full(4));
    REQUIRE(r1.trace.steps.size() == 1);
    CHECK(r1.trace.steps[0].edge == VertexSet::of({1, 3, 4}));
    CHECK(r1.trace.steps[0].trigger == VertexSet::of({1}));
    CHECK(r1.trace.steps[0].newly_black == VertexSet::of({3, 4}));

    const auto r2 = zf::closure(h, Rule::R2, black);
    CHECK(r2.black == black);
    CHECK(r2.trace.steps.empty());
}

TEST_CASE("traces replay to the final set") {
    std::mt19937 rng(1003);
    for (int trial = 0; trial < 60; ++trial) {
        const Hypergraph h = zft::random_hypergraph(rng, 1, 7);
        const VertexSet start = zft::random_subset(rng, h.n());
        for (Rule rule : {Rule::R1, Rule::R2}) {
            const auto result = zf::closure(h, rule, start);
            VertexSet replay = start;
            for (const zf::ForcingStep& s : result.trace.steps) {
                CHECK(s.trigger == (s.edge & replay));
                CHECK(s.newly_black == (s.edge - replay));
                CHECK_FALSE(s.trigger.empty());
                CHECK_FALSE(s.newly_black.empty());
                replay |= s.edge;
            }
            CHECK(replay == result.black);
            CHECK(zf::closure_set(h, rule, start) == result.black);
        }
    }
}

TEST_CASE("closure agrees with the quantified-trigger oracle") {
    std::mt19937 rng(2024);
    auto instances = zft::zoo();
    for (int i = 0; i < 20; ++i) instances.push_back(zft::random_hypergraph(rng, 1, 5));

    for (const Hypergraph& h : instances) {
        if (h.n() > 5) continue;
        for (std::uint64_t bits = 0; bits < (1ULL << h.n()); ++bits) {
            const VertexSet black = VertexSet::from_bits(bits);
            for (Rule rule : {Rule::R1, Rule::R2})
                CHECK(zf::closure_set(h, rule, black) == zft::oracle_closure(h, rule, black));
            if (h.is_graph())
                CHECK(zf::closure_set(h, Rule::R0, black) ==
                      zft::oracle_closure(h, Rule::R0, black));
        }
    }
}

TEST_CASE("closure is independent of the firing order") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 80; ++trial) {
        const Hypergraph h = zft::random_hypergraph(rng, 1, 7);
        const VertexSet start = zft::random_subset(rng, h.n());
        for (Rule rule : {Rule::R1, Rule::R2}) {
            const VertexSet fixed = zf::closure(h, rule, start).black;
            for (int run = 0; run < 3; ++run) {
                const auto random_pick = [&](const std::vector<zf::FireableStep>& steps) {
                    return static_cast<std::size_t>(rng() % steps.size());
                };
                CHECK(zf::closure_with_choice(h, rule, start, random_pick).black == fixed);
            }
        }
    }
}

TEST_CASE("closure is monotone in the starting set") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 80; ++trial) {
        const Hypergraph h = zft::random_hypergraph(rng, 1, 7);
        const VertexSet small = zft::random_subset(rng, h.n());
        const VertexSet big = small | zft::random_subset(rng, h.n());
        for (Rule rule : {Rule::R1, Rule::R2})
            CHECK(zf::closure_set(h, rule, small).subset_of(zf::closure_set(h, rule, big)));
    }
}

TEST_CASE("the second rule never outruns the first") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 80; ++trial) {
        const Hypergraph h = zft::random_hypergraph(rng, 1, 7);
        const VertexSet start = zft::random_subset(rng, h.n());
        CHECK(zf::closure_set(h, Rule::R2, start).subset_of(zf::closure_set(h, Rule::R1, start)));
    }
}

TEST_CASE("all three rules coincide on graphs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        const Hypergraph g = zft::random_graph(rng, 1, 8);
        const VertexSet start = zft::random_subset(rng, g.n());
        const VertexSet r0 = zf::closure_set(g, Rule::R0, start);
        CHECK(r0 == zf::closure_set(g, Rule::R1, start));
        CHECK(r0 == zf::closure_set(g, Rule::R2, start));
    }
}

TEST_CASE("known forcing sets of the 8-vertex sample graph") {
    const Hypergraph g = zft::sample_graph8();
    CHECK(zf::is_forcing(g, Rule::R0, VertexSet::of({1, 2, 7})));
    CHECK(zf::is_forcing(g, Rule::R0, VertexSet::of({3, 5, 6, 7})));
    CHECK_FALSE(zf::is_forcing(g, Rule::R0, VertexSet::of({1, 2})));
}

TEST_CASE("forcing sets are upward closed") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const Hypergraph h = zft::random_hypergraph(rng, 1, 7);
        const VertexSet f = zft::random_nonempty_subset(rng, h.n());
        for (Rule rule : {Rule::R1, Rule::R2}) {
            if (!zf::is_forcing(h, rule, f)) continue;
            const VertexSet bigger = f | zft::random_subset(rng, h.n());
            CHECK(zf::is_forcing(h, rule, bigger));
        }
    }
}

TEST_CASE("immunity on the triangle with tail") {
    const Hypergraph g = zft::triangle_with_tail();
    CHECK(zf::is_immune(g, Rule::R2, VertexSet::of({1, 2})));
    CHECK_FALSE(zf::is_immune(g, Rule::R2, VertexSet::of({1, 2, 3})));
    // the whole ground set is always immune: nothing fires from nothing
    CHECK(zf::is_immune(g, Rule::R2, VertexSet::full(4)));
    CHECK(zf::is_immune(zft::three_triples(), Rule::R1, VertexSet::full(4)));
}

TEST_CASE("empty candidates are rejected") {
    const Hypergraph h = zft::three_triples();
    CHECK_THROWS_AS(zf::is_forcing(h, Rule::R1, VertexSet{}), zf::EmptySet);
    CHECK_THROWS_AS(zf::is_immune(h, Rule::R1, VertexSet{}), zf::EmptySet);
    CHECK_THROWS_AS(zf::is_immune_nbhd(h, Rule::R1, VertexSet{}), zf::EmptySet);
    CHECK_THROWS_AS(zf::is_forcing(h, Rule::R1, VertexSet::of({5})), zf::VertexOutOfRange);
}

TEST_CASE("sigma witness sets on the three-triples example") {
    const Hypergraph h = zft::three_triples();
    const VertexSet x = VertexSet::of({2, 3});
    const VertexSet a = VertexSet::of({1, 2, 3});
    CHECK(zf::sigma1(h, x, a).empty());
    CHECK(zf::sigma2(h, x, a).size() == 3);
    CHECK_THROWS_AS(zf::sigma1(h, x, VertexSet::of({1, 2})), zf::NotAnEdge);

    // an edge disjoint from x witnesses nothing
    const Hypergraph g = zft::triangle_with_tail();
    const auto s1 = zf::sigma1(g, VertexSet::of({1, 2}), VertexSet::of({3, 4}));
    const auto s2 = zf::sigma2(g, VertexSet::of({1, 2}), VertexSet::of({3, 4}));
    CHECK(s1.empty());
    CHECK(s2.empty());
}

TEST_CASE("sigma1 members always sit inside sigma2") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        const Hypergraph h = zft::random_hypergraph(rng, 1, 6);
        const VertexSet x = zft::random_nonempty_subset(rng, h.n());
        for (VertexSet a : h.edges()) {
            const auto s1 = zf::sigma1(h, x, a);
            const auto s2 = zf::sigma2(h, x, a);
            for (VertexSet w : s1) CHECK(std::count(s2.begin(), s2.end(), w) == 1);
        }
    }
}

TEST_CASE("neighbourhood characterization agrees with the dynamics") {
    std::mt19937 rng(7001);
    auto instances = zft::zoo();
    for (int i = 0; i < 15; ++i) instances.push_back(zft::random_hypergraph(rng, 1, 5));

    for (const Hypergraph& h : instances) {
        if (h.n() > 5) continue;
        for (std::uint64_t bits = 1; bits < (1ULL << h.n()); ++bits) {
            const VertexSet x = VertexSet::from_bits(bits);
            for (Rule rule : {Rule::R1, Rule::R2})
                CHECK(zf::is_immune_nbhd(h, rule, x) == zf::is_immune(h, rule, x));
            if (h.is_graph())
                CHECK(zf::is_immune_nbhd(h, Rule::R0, x) == zf::is_immune(h, Rule::R0, x));
        }
    }
}

TEST_CASE("forcing numbers of named instances") {
    CHECK(zf::forcing_number(zft::three_triples(), Rule::R1) == 2);
    CHECK(zf::forcing_number(zft::three_triples(), Rule::R2) == 2);
    CHECK(zf::forcing_number(zf::complete_graph(4), Rule::R0) == 3);
    CHECK(zf::forcing_number(zf::edgeless_graph(3), Rule::R0) == 3);
    CHECK(zf::forcing_number(Hypergraph::validate(3, {VertexSet::full(3)}), Rule::R1) == 1);
    CHECK_THROWS_AS(zf::forcing_number(zft::three_triples(), Rule::R0), zf::RuleNotApplicable);
    CHECK_THROWS_AS(zf::forcing_number(Hypergraph::validate(0, {}), Rule::R1), zf::EmptySet);
}
