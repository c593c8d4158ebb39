#include <doctest.h>

#include "oracles.hpp"

#include <dpdp/catalog.hpp>
#include <dpdp/domination.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace dpdp;

namespace {

Multigraph random_simple(std::mt19937_64& rng, std::size_t n, double density)
{
    std::bernoulli_distribution coin(density);
    std::vector<EdgeEndpoints> edges;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (coin(rng))
                edges.emplace_back(i, j);
    return Multigraph(n, edges);
}

std::vector<std::uint32_t> engine_partitions(const Multigraph& g)
{
    std::vector<std::uint32_t> out;
    for (const auto& p : enumerate_dp_pairs(g, 1U << 20))
        out.push_back(oracle::mask_of(p.p));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_SUITE("domination")
{
    TEST_CASE("is_dominating")
    {
        auto k3 = complete_graph(3);
        for (Vertex v = 0; v < 3; ++v)
            CHECK(is_dominating(k3, VertexSet(3, {v})));
        CHECK_FALSE(is_dominating(path_graph(4), VertexSet(4, {0})));
        CHECK(is_dominating(cycle_graph(7), VertexSet::full(7)));
    }

    TEST_CASE("perfect matchings on induced subgraphs")
    {
        auto p4 = path_graph(4);
        auto m = perfect_matching_on(p4, VertexSet(4, {1, 2}));
        REQUIRE(m.has_value());
        CHECK(*m == std::vector<EdgeId>{1});
        CHECK_FALSE(perfect_matching_on(p4, VertexSet(4, {0, 1, 2})).has_value());
        auto c6 = perfect_matching_on(cycle_graph(6), VertexSet::full(6));
        REQUIRE(c6.has_value());
        CHECK(c6->size() == 3);
        CHECK(perfect_matching_on(p4, VertexSet(4)) == std::vector<EdgeId>{});
        CHECK_THROWS_AS(perfect_matching_on(p4, VertexSet(5)), std::invalid_argument);
    }

    TEST_CASE("a loop never pairs a vertex with itself")
    {
        CHECK_FALSE(has_perfect_matching_on(Multigraph(1, {{0, 0}}), VertexSet(1, {0})));
    }

    TEST_CASE("is_dp_pair on hand-built pairs")
    {
        auto p4 = path_graph(4);
        CHECK(is_dp_pair(p4, DpPair{VertexSet(4, {0, 3}), VertexSet(4, {1, 2}), {1}}));
        CHECK_FALSE(is_dp_pair(p4, DpPair{VertexSet(4, {0, 3}), VertexSet(4, {1, 2}), {0}}));
        CHECK_FALSE(is_dp_pair(p4, DpPair{VertexSet(4, {0, 1}), VertexSet(4, {2, 3}), {2}}));
        auto k3 = complete_graph(3);
        CHECK(is_dp_pair(k3, DpPair{VertexSet(3, {0}), VertexSet(3, {1, 2}), {2}}));
        CHECK(dp_pair_violation(k3, DpPair{VertexSet(3, {0, 1}), VertexSet(3, {1, 2}), {2}}).has_value());
        CHECK(is_paired_dominating(p4, VertexSet(4, {1, 2})));
        CHECK_FALSE(is_paired_dominating(p4, VertexSet(4, {0, 1})));
    }

    TEST_CASE("no partition of C5 works")
    {
        CHECK_FALSE(is_dpdp(cycle_graph(5)));
        CHECK(enumerate_dp_pairs(cycle_graph(5), 10).empty());
        CHECK(oracle::dp_partitions(cycle_graph(5)).empty());
    }

    TEST_CASE("path and cycle tables")
    {
        for (std::size_t n = 1; n <= 20; ++n) {
            bool expected = !(n == 1 || n == 2 || n == 3 || n == 5 || n == 6 || n == 9);
            CHECK_MESSAGE(is_dpdp(path_graph(n)) == expected, "P_" << n);
        }
        for (std::size_t n = 3; n <= 20; ++n)
            CHECK_MESSAGE(is_dpdp(cycle_graph(n)) == (n != 5), "C_" << n);
    }

    TEST_CASE("cubic and complete graphs")
    {
        CHECK(is_dpdp(complete_graph(4)));
        CHECK(is_dpdp(complete_bipartite_graph(3, 3)));
        for (std::size_t n = 3; n <= 8; ++n)
            CHECK(is_dpdp(complete_graph(n)));
    }

    TEST_CASE("pair enumeration examples")
    {
        auto p4 = enumerate_dp_pairs(path_graph(4), 10);
        REQUIRE(p4.size() == 1);
        CHECK(p4[0].d == VertexSet(4, {0, 3}));
        CHECK(p4[0].p == VertexSet(4, {1, 2}));
        CHECK(enumerate_dp_pairs(complete_graph(3), 10).size() == 3);
        CHECK(enumerate_dp_pairs(complete_graph(3), 2).size() == 2);
        CHECK_THROWS_AS(enumerate_dp_pairs(path_graph(4), 0), std::invalid_argument);
    }

    TEST_CASE("enumeration order does not depend on the cap")
    {
        auto g = complete_graph(5);
        auto all = enumerate_dp_pairs(g, 1000);
        auto some = enumerate_dp_pairs(g, 4);
        REQUIRE(some.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(same_partition(all[i], some[i]));
    }

    TEST_CASE("isolated vertices and the empty graph")
    {
        CHECK_FALSE(is_dpdp(Multigraph(5, {{0, 1}, {1, 2}, {2, 3}})));
        CHECK_FALSE(is_dpdp(Multigraph(1, {})));
        CHECK(is_dpdp(Multigraph(0, {})));
    }

    TEST_CASE("loops and parallel edges do not matter")
    {
        Multigraph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 1}, {1, 2}, {3, 3}});
        CHECK(is_dpdp(g));
        CHECK_FALSE(is_dpdp(Multigraph(3, {{0, 1}, {1, 2}, {0, 0}, {1, 2}})));
    }

    TEST_CASE("leaves land in D and supports in P")
    {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            auto g = random_tree(4 + rng() % 12, rng);
            for (const auto& pair : enumerate_dp_pairs(g, 8)) {
                CHECK(leaves(g).is_subset_of(pair.d));
                CHECK(supports(g).is_subset_of(pair.p));
            }
        }
    }

    TEST_CASE("agrees with exhaustive partition search")
    {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 400; ++trial) {
            auto n = 1 + rng() % 12;
            auto g = random_simple(rng, n, 0.15 + 0.5 * (rng() % 100) / 100.0);
            auto expected = oracle::dp_partitions(g);
            auto found = find_dp_pair(g);
            REQUIRE(found.has_value() == !expected.empty());
            if (found)
                CHECK(is_dp_pair(g, *found));
            CHECK(engine_partitions(g) == expected);
        }
    }

    TEST_CASE("agrees with exhaustive pairing search")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 1500; ++trial) {
            auto n = 2 + rng() % 13;
            auto g = random_simple(rng, n, 0.1 + 0.4 * (rng() % 100) / 100.0);
            std::uint32_t mask = static_cast<std::uint32_t>(rng()) & ((1U << n) - 1);
            VertexSet s(n);
            for (Vertex v = 0; v < n; ++v)
                if ((mask >> v) & 1U)
                    s.insert(v);
            if (s.size() > 12)
                continue;
            auto m = perfect_matching_on(g, s);
            CHECK(m.has_value() == oracle::has_perfect_matching(g, mask));
            if (m) {
                VertexSet covered(n);
                for (auto e : *m) {
                    const auto& rec = g.edge(e);
                    CHECK(s.contains(rec.u));
                    CHECK(s.contains(rec.v));
                    CHECK_FALSE(covered.contains(rec.u));
                    CHECK_FALSE(covered.contains(rec.v));
                    covered.insert(rec.u);
                    covered.insert(rec.v);
                }
                CHECK(covered == s);
            }
        }
    }

    TEST_CASE("adding an edge keeps a graph DPDP")
    {
        std::mt19937_64 rng(23);
        int checked = 0;
        while (checked < 300) {
            auto n = 3 + rng() % 10;
            auto g = random_simple(rng, n, 0.3);
            if (!is_dpdp(g))
                continue;
            auto edges = g.endpoint_list();
            edges.emplace_back(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
            CHECK(is_dpdp(Multigraph(n, edges)));
            ++checked;
        }
    }
}
