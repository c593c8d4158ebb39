#pragma once

#include <dpdp/domination.hpp>
#include <dpdp/good_subgraph.hpp>
#include <dpdp/graph.hpp>
#include <dpdp/subdivision.hpp>

#include <json.hpp>

#include <span>

namespace dpdp::cli {

using Json = nlohmann::ordered_json;

Json vertices_json(const VertexSet& s);
/// Edges as [u, v, id] triples in the given id order.
Json edges_json(const Multigraph& g, std::span<const EdgeId> ids);
Json graph_json(const Multigraph& g);
Json pair_json(const Multigraph& g, const DpPair& pair);
Json alpha_json(const LeafMultiplicity& alpha);
Json labeling_json(const S2Labeling& labeling);
Json certificate_json(const Multigraph& h, const GoodSubgraphCertificate& cert);

} // namespace dpdp::cli
