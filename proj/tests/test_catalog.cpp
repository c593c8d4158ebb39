#include <doctest.h>

#include <dpdp/catalog.hpp>
#include <dpdp/domination.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace dpdp;

namespace {

void check_well_formed(const Multigraph& g)
{
    std::size_t total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        total += g.degree(v);
    CHECK(total == 2 * g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(g.edge(e).id == e);
        CHECK(g.edge(e).v < g.vertex_count());
    }
}

std::string fixture(const std::string& name)
{
    std::ifstream in(std::string(DPDP_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Degree sequence plus sorted neighbour-degree lists: equal for isomorphic graphs.
std::vector<std::vector<std::size_t>> invariant(const Multigraph& g)
{
    std::vector<std::vector<std::size_t>> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::size_t> row{g.degree(v)};
        for (auto w : g.neighbors(v))
            row.push_back(g.degree(w));
        std::sort(row.begin() + 1, row.end());
        out.push_back(row);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_SUITE("catalog")
{
    TEST_CASE("families")
    {
        auto c1 = make(CycleFamily{1});
        CHECK(c1.vertex_count() == 1);
        CHECK(c1.edge_count() == 1);
        CHECK(c1.has_loop(0));
        auto c2 = make(CycleFamily{2});
        CHECK(c2.multiplicity(0, 1) == 2);

        auto ds = make(DoubleStarFamily{2, 3});
        CHECK(ds.vertex_count() == 7);
        CHECK(ds.edge_count() == 6);
        CHECK((VertexSet::full(7) - leaves(ds)) == VertexSet(7, {0, 1}));
        CHECK(ds.adjacent(0, 1));

        auto cor = make(CoronaFamily{path_graph(3), {}});
        CHECK(cor.vertex_count() == 6);
        CHECK((leaves(cor) | supports(cor)) == VertexSet::full(6));

        auto gen = corona_graph(path_graph(2), {2, 3});
        CHECK(gen.vertex_count() == 7);
        CHECK(leaves(gen).size() == 5);

        CHECK(make(CompleteBipartiteFamily{3, 3}).edge_count() == 9);
        CHECK(make(StarFamily{4}).vertex_count() == 5);
        CHECK(make(CompleteFamily{5}).edge_count() == 10);
        CHECK(make(PathFamily{1}).edge_count() == 0);

        for (const auto& g : {make(CycleFamily{7}), ds, cor, gen, complete_graph(6), complete_bipartite_graph(2, 5)})
            check_well_formed(g);
    }

    TEST_CASE("family parameter checks")
    {
        CHECK_THROWS_AS(make(CycleFamily{0}), std::invalid_argument);
        CHECK_THROWS_AS(make(DoubleStarFamily{0, 2}), std::invalid_argument);
        CHECK_THROWS_AS(make(StarFamily{0}), std::invalid_argument);
        CHECK_THROWS_AS(make(CompleteBipartiteFamily{0, 2}), std::invalid_argument);
        CHECK_THROWS_AS(corona_graph(path_graph(3), {1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(corona_graph(path_graph(2), {1, 0}), std::invalid_argument);
    }

    TEST_CASE("connected simple graph counts")
    {
        const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
        for (std::size_t n = 1; n <= 7; ++n) {
            auto graphs = enumerate_connected_simple(n);
            CHECK_MESSAGE(graphs.size() == expected[n - 1], "n = " << n);
            if (n <= 6)
                for (const auto& g : graphs) {
                    CHECK(g.is_simple());
                    CHECK(is_connected(g));
                    CHECK(g.vertex_count() == n);
                }
        }
        CHECK_THROWS_AS(enumerate_connected_simple(0), std::invalid_argument);
        CHECK_THROWS_AS(enumerate_connected_simple(8), std::invalid_argument);
    }

    TEST_CASE("simple enumeration is deterministic")
    {
        CHECK(enumerate_connected_simple(5) == enumerate_connected_simple(5));
    }

    TEST_CASE("multigraph enumeration")
    {
        auto one = enumerate_connected_multigraphs(1);
        REQUIRE(one.size() == 2);
        CHECK(one[0] == cycle_graph(1));
        CHECK(one[1] == path_graph(2));

        auto two = enumerate_connected_multigraphs(2);
        CHECK(two.size() == 6);
        auto has = [&](const Multigraph& g) { return std::find(two.begin(), two.end(), g) != two.end(); };
        CHECK(has(Multigraph(2, {{0, 1}, {0, 1}})));
        CHECK(has(Multigraph(1, {{0, 0}, {0, 0}})));
        std::size_t p3 = 0, p2_loop = 0;
        for (const auto& g : two) {
            p3 += g.vertex_count() == 3;
            p2_loop += g.vertex_count() == 2 && !g.is_simple() && g.multiplicity(0, 1) == 1;
        }
        CHECK(p3 == 1);
        CHECK(p2_loop == 1);

        // Connected loopy multigraphs by edge count: 2, 4, 11, 30, 95.
        CHECK(enumerate_connected_multigraphs(3).size() == 17);
        CHECK(enumerate_connected_multigraphs(4).size() == 47);
        auto five = enumerate_connected_multigraphs(5);
        CHECK(five.size() == 142);
        for (const auto& g : five) {
            CHECK_FALSE(has_isolated_vertex(g));
            CHECK(is_connected(g));
            CHECK(g.edge_count() >= 1);
            CHECK(g.edge_count() <= 5);
        }
        CHECK_THROWS_AS(enumerate_connected_multigraphs(6), std::invalid_argument);
    }

    TEST_CASE("tree enumeration")
    {
        const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
        for (std::size_t n = 1; n <= 10; ++n) {
            auto trees = enumerate_trees(n);
            CHECK_MESSAGE(trees.size() == expected[n - 1], "n = " << n);
            for (const auto& t : trees)
                CHECK(is_tree(t));
        }
    }

    TEST_CASE("Pruefer decoding")
    {
        CHECK(tree_from_pruefer(2, {}) == path_graph(2));
        auto star = tree_from_pruefer(5, {0, 0, 0});
        CHECK(star.degree(0) == 4);
        CHECK_THROWS_AS(tree_from_pruefer(5, {0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(tree_from_pruefer(4, {0, 9}), std::invalid_argument);
        std::mt19937_64 rng(1);
        for (int i = 0; i < 100; ++i) {
            auto n = 1 + rng() % 14;
            auto t = random_tree(n, rng);
            CHECK(t.vertex_count() == n);
            CHECK(is_tree(t));
        }
    }

    TEST_CASE("graph6")
    {
        CHECK(write_graph6(complete_graph(3)) == "Bw");
        CHECK(read_graph6("Bw") == complete_graph(3));
        CHECK(write_graph6(Multigraph(0, {})) == "?");
        CHECK(read_graph6("?").vertex_count() == 0);
        CHECK(read_graph6("Bw\n") == complete_graph(3));

        for (const auto& g : enumerate_connected_simple(5))
            CHECK(read_graph6(write_graph6(g)) == g);

        std::mt19937_64 rng(42);
        for (int i = 0; i < 200; ++i) {
            auto n = 1 + rng() % 20;
            std::vector<EdgeEndpoints> edges;
            for (Vertex j = 1; j < n; ++j)
                for (Vertex k = 0; k < j; ++k)
                    if (rng() % 3 == 0)
                        edges.emplace_back(k, j);
            Multigraph g(n, edges);
            CHECK(read_graph6(write_graph6(g)) == g);
        }

        CHECK_THROWS_AS(write_graph6(cycle_graph(1)), std::invalid_argument);
        CHECK_THROWS_AS(write_graph6(cycle_graph(2)), std::invalid_argument);
        CHECK_THROWS_AS(write_graph6(path_graph(63)), std::invalid_argument);
        CHECK_THROWS_AS(read_graph6(""), std::invalid_argument);
        CHECK_THROWS_AS(read_graph6("B"), std::invalid_argument);
        CHECK_THROWS_AS(read_graph6("Bww"), std::invalid_argument);
        CHECK_THROWS_AS(read_graph6("B "), std::invalid_argument);
        CHECK_THROWS_AS(read_graph6("Bx"), std::invalid_argument);
        CHECK_THROWS_AS(read_graph6("~??"), std::invalid_argument);
    }

    TEST_CASE("graph6 files")
    {
        auto graphs = read_graph6_file(">>graph6<<Bw\n\nC~\r\n");
        REQUIRE(graphs.size() == 2);
        CHECK(graphs[0] == complete_graph(3));
        CHECK(graphs[1] == complete_graph(4));
    }

    TEST_CASE("edge lists")
    {
        CHECK(read_edge_list("2 2\n0 1\n0 1") == cycle_graph(2));
        CHECK(read_edge_list("# loop\n1 1\n  0 0\n") == cycle_graph(1));
        auto g = Multigraph(3, {{0, 1}, {1, 1}, {1, 2}, {1, 2}});
        CHECK(read_edge_list(write_edge_list(g)) == g);
        CHECK(write_edge_list(path_graph(2)) == "2 1\n0 1\n");
        CHECK_THROWS_AS(read_edge_list(""), std::invalid_argument);
        CHECK_THROWS_AS(read_edge_list("2 2\n0 1\n"), std::invalid_argument);
        CHECK_THROWS_AS(read_edge_list("2 1\n0 2\n"), std::invalid_argument);
        CHECK_THROWS_AS(read_edge_list("2 1\n0 x\n"), std::invalid_argument);
        CHECK_THROWS_AS(read_edge_list("2 1\n0 1 5\n"), std::invalid_argument);
        CHECK_THROWS_AS(read_edge_list("-2 1\n0 1\n"), std::invalid_argument);
    }

    TEST_CASE("cubic fixture")
    {
        auto graphs = read_graph6_file(fixture("cubic_connected_le10.g6"));
        CHECK(graphs.size() == 27);
        std::map<std::size_t, std::size_t> by_order;
        for (const auto& g : graphs) {
            ++by_order[g.vertex_count()];
            CHECK(is_connected(g));
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                CHECK(g.degree(v) == 3);
        }
        CHECK(by_order == std::map<std::size_t, std::size_t>{{4, 1}, {6, 2}, {8, 5}, {10, 19}});
        auto contains_like = [&](const Multigraph& h) {
            std::size_t hits = 0;
            for (const auto& g : graphs)
                hits += invariant(g) == invariant(h);
            return hits >= 1;
        };
        CHECK(contains_like(complete_graph(4)));
        CHECK(contains_like(complete_bipartite_graph(3, 3)));
        Multigraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
        CHECK(contains_like(petersen));
    }
}
