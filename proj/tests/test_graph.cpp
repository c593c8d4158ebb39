#include <doctest.h>

#include <dpdp/catalog.hpp>
#include <dpdp/graph.hpp>

#include <random>
#include <stdexcept>

using namespace dpdp;

namespace {

Multigraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m)
{
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<EdgeEndpoints> edges;
    for (std::size_t i = 0; i < m; ++i)
        edges.emplace_back(pick(rng), pick(rng));
    return Multigraph(n, edges);
}

std::vector<Vertex> members(const VertexSet& s) { return s.members(); }

} // namespace

TEST_SUITE("vertex_set")
{
    TEST_CASE("membership and set algebra")
    {
        VertexSet a(10, {1, 3, 5});
        VertexSet b(10, {3, 4});
        CHECK(a.size() == 3);
        CHECK(a.contains(3));
        CHECK_FALSE(a.contains(2));
        CHECK_FALSE(a.contains(99));
        CHECK(members(a | b) == std::vector<Vertex>{1, 3, 4, 5});
        CHECK(members(a & b) == std::vector<Vertex>{3});
        CHECK(members(a - b) == std::vector<Vertex>{1, 5});
        CHECK(a.complement().size() == 7);
        CHECK(a.intersects(b));
        CHECK(VertexSet(10, {3}).is_subset_of(a));
        CHECK(VertexSet::full(70).size() == 70);
        CHECK(VertexSet::full(70).complement().empty());
    }

    TEST_CASE("errors on foreign universes and ids")
    {
        VertexSet a(4);
        CHECK_THROWS_AS(a.insert(4), std::out_of_range);
        CHECK_THROWS_AS(a |= VertexSet(5), std::invalid_argument);
        CHECK_THROWS_AS((void)(a & VertexSet(3)), std::invalid_argument);
    }

    TEST_CASE("ordering is lexicographic over members")
    {
        CHECK(VertexSet(5, {0, 4}) < VertexSet(5, {1}));
        CHECK(VertexSet(5, {1}) < VertexSet(5, {1, 2}));
        CHECK(VertexSet(5, {2}) == VertexSet(5, {2}));
    }
}

TEST_SUITE("graph_core")
{
    TEST_CASE("degree counts a loop twice")
    {
        CHECK(degree(cycle_graph(1), 0) == 2);
        CHECK(degree(path_graph(4), 0) == 1);
        CHECK(degree(cycle_graph(2), 0) == 2);
        Multigraph g(2, {{0, 0}, {0, 0}, {0, 1}});
        CHECK(g.degree(0) == 5);
        CHECK(g.neighbors(0).size() == 2);
    }

    TEST_CASE("leaves and supports")
    {
        auto star = star_graph(3);
        CHECK(members(leaves(star)) == std::vector<Vertex>{1, 2, 3});
        CHECK(members(supports(star)) == std::vector<Vertex>{0});
        CHECK(members(strong_supports(star)) == std::vector<Vertex>{0});
        CHECK(weak_supports(star).empty());

        auto ds = double_star_graph(2, 3);
        CHECK(leaves(ds).size() == 5);
        CHECK(supports(ds).size() == 2);
        CHECK(strong_supports(ds).size() == 2);

        auto c6 = cycle_graph(6);
        CHECK(leaves(c6).empty());
        CHECK(supports(c6).empty());
        CHECK(strong_supports(c6).empty());
        CHECK(weak_supports(c6).empty());
    }

    TEST_CASE("P2 vertices are both leaf and support")
    {
        auto p2 = path_graph(2);
        CHECK(leaves(p2).size() == 2);
        CHECK(supports(p2).size() == 2);
        CHECK(weak_supports(p2).size() == 2);
    }

    TEST_CASE("neighbourhoods")
    {
        CHECK(members(neighborhood(cycle_graph(1), 0)) == std::vector<Vertex>{0});
        auto p4 = path_graph(4);
        CHECK(members(neighborhood(p4, VertexSet(4, {1, 2}))) == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(closed_neighborhood(p4, VertexSet(4)).empty());
        CHECK(members(closed_neighborhood(p4, 0)) == std::vector<Vertex>{0, 1});
    }

    TEST_CASE("edge deletion keeps vertices and compacts ids")
    {
        auto p4 = path_graph(4);
        auto cut = delete_edge(p4, 1);
        CHECK(cut.graph.vertex_count() == 4);
        CHECK(connected_components(cut.graph).size() == 2);
        CHECK(cut.new_id_of[0] == EdgeId{0});
        CHECK_FALSE(cut.new_id_of[1].has_value());
        CHECK(cut.new_id_of[2] == EdgeId{1});
        CHECK(cut.old_id_of == std::vector<EdgeId>{0, 2});

        auto c3 = delete_edge(cycle_graph(3), 0).graph;
        CHECK(is_tree(c3));
        CHECK(max_degree(c3) == 2);

        auto c2 = delete_edge(cycle_graph(2), 1).graph;
        CHECK(c2 == path_graph(2));

        CHECK_THROWS_AS(delete_edge(p4, 3), std::out_of_range);
    }

    TEST_CASE("components and distances")
    {
        auto p10 = path_graph(10);
        CHECK(connected_components(p10).size() == 1);
        CHECK(distance(p10, 0, 9) == std::size_t{9});
        CHECK(distance(p10, 4, 4) == std::size_t{0});
        Multigraph two(4, {{0, 1}, {2, 3}});
        CHECK(connected_components(two).size() == 2);
        CHECK_FALSE(distance(two, 0, 3).has_value());
        CHECK(is_connected(Multigraph(1, {{0, 0}, {0, 0}})));
    }

    TEST_CASE("empty graph is legal")
    {
        Multigraph empty(0, {});
        CHECK(empty.edge_count() == 0);
        CHECK(leaves(empty).empty());
        CHECK(connected_components(empty).empty());
        CHECK_FALSE(has_isolated_vertex(empty));
    }

    TEST_CASE("construction rejects out-of-range endpoints")
    {
        CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), std::out_of_range);
        CHECK_THROWS_AS((void)path_graph(3).degree(3), std::out_of_range);
    }

    TEST_CASE("handshake and support partition on random multigraphs")
    {
        std::mt19937_64 rng(20240611);
        for (int trial = 0; trial < 300; ++trial) {
            auto n = 1 + rng() % 9;
            auto g = random_multigraph(rng, n, rng() % 14);
            std::size_t total = 0;
            for (Vertex v = 0; v < n; ++v)
                total += degree(g, v);
            CHECK(total == 2 * g.edge_count());
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                CHECK(g.edge(e).id == e);

            auto s = supports(g);
            CHECK((strong_supports(g) | weak_supports(g)) == s);
            CHECK_FALSE(strong_supports(g).intersects(weak_supports(g)));
            auto lv = leaves(g);
            for (Vertex v = 0; v < n; ++v)
                CHECK(s.contains(v) == neighborhood(g, v).intersects(lv));

            if (g.edge_count() > 0) {
                auto cut = delete_edge(g, static_cast<EdgeId>(rng() % g.edge_count()));
                CHECK(cut.graph.vertex_count() == n);
                CHECK(cut.graph.edge_count() + 1 == g.edge_count());
            }
        }
    }
}
