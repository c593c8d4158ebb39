#pragma once

#include <dpdp/domination.hpp>
#include <dpdp/good_subgraph.hpp>
#include <dpdp/graph.hpp>
#include <dpdp/subdivision.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dpdp {

/// G is DPDP and no single-edge deletion keeps it DPDP. Single edges suffice
/// because every spanning supergraph of a DPDP graph is DPDP.
bool is_minimal_by_deletion(const Multigraph& g);

/// An edge whose deletion leaves a DPDP graph, with the pair that proves it
/// (matching ids refer to the graph after deletion).
struct DeletionWitness {
    EdgeId edge = 0;
    DpPair pair;
};
std::optional<DeletionWitness> find_deletion_witness(const Multigraph& g);

/// Adjacent degree-2 vertices x, y with outer neighbours x', y' that both
/// have further neighbours; S2 of such a graph is never minimal.
struct ReduciblePattern {
    Vertex x = 0;
    Vertex y = 0;
    Vertex x_outer = 0;
    Vertex y_outer = 0;
    friend bool operator==(const ReduciblePattern&, const ReduciblePattern&) = default;
};
std::optional<ReduciblePattern> check_reducible_pattern(const Multigraph& h);

/// Greedy: walk edges by id and drop each one whose removal keeps the graph
/// DPDP. std::nullopt when g is not DPDP.
std::optional<Multigraph> minimal_spanning_dpdp_subgraph(const Multigraph& g);

/// Connected, 2-regular, of order 3, 6 or 9.
bool is_exceptional_cycle(const Multigraph& g);

/// Violations of the structure every DP-pair of a minimal DPDP graph has:
/// D maximal independent, G[P] 1-regular, and each P vertex has exactly one
/// neighbour outside P or only leaves there. Empty when all hold.
std::vector<std::string> minimal_pair_structure_violations(const Multigraph& g, const DpPair& pair);

struct MinimalityReport {
    bool is_dpdp = false;
    bool minimal_by_deletion = false;
    std::optional<S2Labeling> inversion;
    std::optional<GoodSubgraphCertificate> good_subgraph; ///< in the inverted base graph
    std::size_t dp_pair_count_capped = 0;
    bool canonical_pair_unique = false;
    bool exceptional_cycle = false;
    bool verdicts_consistent = false;
};

/// Runs every engine on g. With pair_cap = 2 the count only distinguishes
/// none / unique / several.
MinimalityReport classify(const Multigraph& g, std::size_t pair_cap = 2);

/// Outcome of checking the three characterizations of minimality on S2(H).
struct XcheckResult {
    bool minimal_by_deletion = false;
    bool no_good_subgraph = false;
    bool unique_canonical_or_cycle = false;
    bool reducible_pattern = false;
    std::optional<GoodSubgraphCertificate> good_subgraph;
    std::vector<std::string> failures; ///< empty iff everything agreed

    bool consistent() const { return failures.empty(); }
};

/// Builds G = S2(H) and cross-checks: deletion minimality, absence of a good
/// subgraph in H, and uniqueness of the canonical pair (or an exceptional
/// cycle). Also checks the constructive reduction for a found certificate,
/// the reducible-pattern implication, and the pair structure of minimal G.
/// Throws std::invalid_argument unless H is connected, has an edge and no
/// isolated vertex.
XcheckResult xcheck(const Multigraph& h, const LeafMultiplicity& alpha = {});

} // namespace dpdp
