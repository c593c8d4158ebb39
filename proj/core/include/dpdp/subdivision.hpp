#pragma once

#include <dpdp/domination.hpp>
#include <dpdp/graph.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace dpdp {

/// Number of copies of each leaf of the base graph; unlisted leaves get 1.
using LeafMultiplicity = std::map<Vertex, std::size_t>;

/// A non-leaf vertex of the base graph, kept as is.
struct OldTag {
    Vertex base_vertex = 0;
    friend auto operator<=>(const OldTag&, const OldTag&) = default;
};

/// One of the two subdivision vertices of a base edge. Side 1 is attached to
/// the edge's lower endpoint (EdgeRecord::u), side 2 to EdgeRecord::v; for a
/// loop both sides attach to the loop's vertex.
struct NewTag {
    EdgeId base_edge = 0;
    int side = 1;
    friend auto operator<=>(const NewTag&, const NewTag&) = default;
};

/// Copy `index` (1-based) of a leaf of the base graph.
struct LeafCopyTag {
    Vertex base_leaf = 0;
    std::size_t index = 1;
    friend auto operator<=>(const LeafCopyTag&, const LeafCopyTag&) = default;
};

using VertexTag = std::variant<OldTag, NewTag, LeafCopyTag>;

inline bool is_new(const VertexTag& t) { return std::holds_alternative<NewTag>(t); }

/// Provenance of every vertex of a 2-subdivision graph.
struct S2Labeling {
    Multigraph base;
    LeafMultiplicity alpha; ///< one entry per leaf of `base`
    std::vector<VertexTag> provenance; ///< indexed by vertex of the subdivided graph

    std::map<VertexTag, Vertex> index() const;
    /// Old and leaf-copy vertices.
    VertexSet old_vertices() const;
    /// Subdivision vertices.
    VertexSet new_vertices() const;
};

struct S2Build {
    Multigraph graph;
    S2Labeling labeling;
};

/// Builds S2(base). Throws std::invalid_argument when base has an isolated
/// vertex, or alpha names a non-leaf or a zero count.
S2Build build_s2(const Multigraph& base, const LeafMultiplicity& alpha = {});

/// Order of S2(base) predicted from the base: non-leaves + leaf copies + 2|E|.
std::size_t s2_order(const Multigraph& base, const LeafMultiplicity& alpha);

/// (old vertices, new vertices) with the middle edges as matching.
DpPair canonical_dp_pair(const Multigraph& g, const S2Labeling& labeling);

/// Edge id joining a and b in a simple graph, if any.
std::optional<EdgeId> edge_between(const Multigraph& g, Vertex a, Vertex b);

/// Whether `labeling` explains g exactly: rebuilding from the labeling and
/// mapping vertices through their tags reproduces g's edge set.
bool labeling_reproduces(const Multigraph& g, const S2Labeling& labeling);

/// Recovers a base graph and leaf multiplicities with g = S2(base), or
/// std::nullopt when g is not a 2-subdivision graph. When several labelings
/// exist (cycles of length 3k) the lexicographically least old/new split in
/// vertex order is returned.
std::optional<S2Labeling> invert_s2(const Multigraph& g);
bool is_2_subdivision(const Multigraph& g);

} // namespace dpdp
