#pragma once

#include <dpdp/domination.hpp>
#include <dpdp/graph.hpp>
#include <dpdp/subdivision.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dpdp {

/// Orientation of one edge. A loop arc has tail == head.
struct Arc {
    EdgeId edge = 0;
    Vertex tail = 0;
    Vertex head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Witness that Q is a good subgraph of a host graph H.
///
/// Arcs are identified by the edge they orient. Every q-vertex owns one
/// oriented path, listed as the edge ids of its arcs in travel order.
/// Vertices on a path are distinct, except that the head of the last arc may
/// be a vertex the path already visited (a loop arc is one such case).
struct GoodSubgraphCertificate {
    VertexSet q_vertices;
    std::vector<EdgeId> q_edges; ///< ascending
    std::vector<EdgeId> e_set;   ///< ascending; the oriented edges
    std::vector<Arc> arcs;       ///< one per e_set entry, ascending by edge
    std::map<Vertex, std::vector<EdgeId>> paths;
};

/// Edges outside Q incident with at least one vertex of Q.
std::vector<EdgeId> edge_boundary(const Multigraph& h, const VertexSet& q_vertices, const std::vector<EdgeId>& q_edges);

/// First violated clause, or std::nullopt when the certificate is valid.
/// Throws std::invalid_argument for ids outside the host graph.
std::optional<std::string> good_certificate_violation(const Multigraph& h, const GoodSubgraphCertificate& cert);
bool verify_good_certificate(const Multigraph& h, const GoodSubgraphCertificate& cert);

/// Searches orientations and path families for the subgraph spanned by
/// `q_edges` (its vertices are their endpoints).
std::optional<GoodSubgraphCertificate> find_certificate_for(const Multigraph& h, const std::vector<EdgeId>& q_edges);

/// Exhaustive search over subgraphs avoiding leaves and supports, connected
/// ones first, smallest first. Throws std::invalid_argument when h has an
/// isolated vertex.
std::optional<GoodSubgraphCertificate> find_good_subgraph(const Multigraph& h);

/// Spanning subgraph of S2(H) with a DP-pair, built from a good subgraph.
struct ReductionPlan {
    S2Build s2;
    std::vector<EdgeId> removed_edges; ///< edge ids of s2.graph, ascending
    Multigraph reduced;                ///< s2.graph without removed_edges
    DpPair pair;                       ///< (D', P') with matching ids of `reduced`
};

/// Throws std::invalid_argument when the certificate does not verify and
/// std::logic_error if the constructed pair fails to verify in the reduced graph.
ReductionPlan reduce_via_good_subgraph(const Multigraph& h, const LeafMultiplicity& alpha, const GoodSubgraphCertificate& cert);

/// On a tree: a connected S with |S| >= 2 in which every vertex has exactly
/// one neighbour outside S and every such outside neighbour is not a leaf.
/// Throws std::invalid_argument when h is not a tree.
std::optional<VertexSet> tree_find_good_subtree(const Multigraph& h);

/// Certificate for a good subtree found by tree_find_good_subtree.
GoodSubgraphCertificate tree_subtree_certificate(const Multigraph& h, const VertexSet& subtree);

struct ComponentReduction {
    std::size_t index = 0; ///< component of Q, ordered by smallest vertex
    GoodSubgraphCertificate certificate;
};

/// Given a good forest Q in a forest H, a component of Q that is good on its
/// own. Throws std::invalid_argument when h is not a forest or cert fails.
std::optional<ComponentReduction> forest_good_decomposition_check(const Multigraph& h, const GoodSubgraphCertificate& cert);

/// Connected components of the subgraph formed by the given edges, as edge
/// lists ordered by their smallest vertex.
std::vector<std::vector<EdgeId>> edge_components(const Multigraph& h, const std::vector<EdgeId>& edges);

} // namespace dpdp
