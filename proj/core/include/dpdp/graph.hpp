#pragma once

#include <dpdp/vertex_set.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dpdp {

/// One edge of a multigraph. Endpoints are stored with u <= v; u == v is a loop.
struct EdgeRecord {
    EdgeId id = 0;
    Vertex u = 0;
    Vertex v = 0;

    bool is_loop() const { return u == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool touches(Vertex x) const { return u == x || v == x; }

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

using EdgeEndpoints = std::pair<Vertex, Vertex>;

/// Immutable finite multigraph. Loops and parallel edges are allowed; edge ids
/// are dense and follow construction order.
///
/// Degree counts edge-ends, so a loop contributes 2. Neighbourhoods are sets:
/// a vertex with a loop is its own neighbour, once.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(std::size_t vertex_count, std::span<const EdgeEndpoints> edges);
    Multigraph(std::size_t vertex_count, std::initializer_list<EdgeEndpoints> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    const EdgeRecord& edge(EdgeId e) const;
    std::span<const EdgeRecord> edges() const { return edges_; }

    /// Edge ids incident with v, ascending; a loop is listed once.
    std::span<const EdgeId> incident_edges(Vertex v) const;
    /// Distinct neighbours of v, ascending; contains v iff v carries a loop.
    std::span<const Vertex> neighbors(Vertex v) const;

    std::size_t degree(Vertex v) const;
    bool has_loop(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    /// Number of edges joining u and v (loops at u when u == v).
    std::size_t multiplicity(Vertex u, Vertex v) const;

    bool is_simple() const;

    std::vector<EdgeEndpoints> endpoint_list() const;

    friend bool operator==(const Multigraph& a, const Multigraph& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    std::size_t vertex_count_ = 0;
    std::vector<EdgeRecord> edges_;
    std::vector<std::size_t> degree_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::vector<Vertex>> neighbors_;
};

std::size_t degree(const Multigraph& g, Vertex v);

VertexSet leaves(const Multigraph& g);
/// Vertices adjacent to at least one leaf. On a P2 component both vertices
/// are simultaneously leaves and supports.
VertexSet supports(const Multigraph& g);
VertexSet strong_supports(const Multigraph& g);
VertexSet weak_supports(const Multigraph& g);
/// Leaf neighbours of a vertex.
VertexSet leaves_at(const Multigraph& g, Vertex s);

VertexSet neighborhood(const Multigraph& g, Vertex v);
VertexSet neighborhood(const Multigraph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Multigraph& g, Vertex v);
VertexSet closed_neighborhood(const Multigraph& g, const VertexSet& x);

struct EdgeDeletion {
    Multigraph graph;
    /// new_id_of[old id] for surviving edges; std::nullopt for removed ones.
    std::vector<std::optional<EdgeId>> new_id_of;
    /// old id for each new edge id.
    std::vector<EdgeId> old_id_of;
};

/// Removes one edge; vertex ids are unchanged and remaining edge ids are
/// compacted in order. Throws std::out_of_range for an unknown id.
EdgeDeletion delete_edge(const Multigraph& g, EdgeId e);
EdgeDeletion delete_edges(const Multigraph& g, std::span<const EdgeId> removed);

std::vector<VertexSet> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);
std::optional<std::size_t> distance(const Multigraph& g, Vertex from, Vertex to);

std::size_t max_degree(const Multigraph& g);
bool has_isolated_vertex(const Multigraph& g);
bool is_forest(const Multigraph& g);
bool is_tree(const Multigraph& g);

/// Subgraph induced by `keep`, with vertices renumbered in ascending order.
/// `old_vertex_of` receives the original id of every new vertex when given.
Multigraph induced_subgraph(const Multigraph& g, const VertexSet& keep, std::vector<Vertex>* old_vertex_of = nullptr);

/// Same vertex set, edges restricted to `keep` (by id), compacted in id order.
Multigraph spanning_subgraph(const Multigraph& g, std::span<const EdgeId> keep);

} // namespace dpdp
