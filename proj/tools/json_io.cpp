#include "json_io.hpp"

#include <variant>

namespace dpdp::cli {

Json vertices_json(const VertexSet& s)
{
    Json out = Json::array();
    for (auto v : s.members())
        out.push_back(v);
    return out;
}

Json edges_json(const Multigraph& g, std::span<const EdgeId> ids)
{
    Json out = Json::array();
    for (auto e : ids) {
        const auto& rec = g.edge(e);
        out.push_back(Json::array({rec.u, rec.v, rec.id}));
    }
    return out;
}

Json graph_json(const Multigraph& g)
{
    std::vector<EdgeId> all(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        all[e] = e;
    Json out;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    out["edges"] = edges_json(g, all);
    return out;
}

Json pair_json(const Multigraph& g, const DpPair& pair)
{
    Json out;
    out["D"] = vertices_json(pair.d);
    out["P"] = vertices_json(pair.p);
    out["matching"] = edges_json(g, pair.matching);
    return out;
}

Json alpha_json(const LeafMultiplicity& alpha)
{
    Json out = Json::array();
    for (const auto& [leaf, count] : alpha)
        out.push_back(Json::array({leaf, count}));
    return out;
}

Json labeling_json(const S2Labeling& labeling)
{
    Json tags = Json::array();
    for (std::size_t v = 0; v < labeling.provenance.size(); ++v) {
        Json t;
        t["vertex"] = v;
        std::visit(
            [&](const auto& tag) {
                using T = std::decay_t<decltype(tag)>;
                if constexpr (std::is_same_v<T, OldTag>) {
                    t["kind"] = "old";
                    t["base_vertex"] = tag.base_vertex;
                } else if constexpr (std::is_same_v<T, NewTag>) {
                    t["kind"] = "new";
                    t["base_edge"] = tag.base_edge;
                    t["side"] = tag.side;
                } else {
                    t["kind"] = "leaf_copy";
                    t["base_leaf"] = tag.base_leaf;
                    t["index"] = tag.index;
                }
            },
            labeling.provenance[v]);
        tags.push_back(std::move(t));
    }
    Json out;
    out["base"] = graph_json(labeling.base);
    out["alpha"] = alpha_json(labeling.alpha);
    out["provenance"] = std::move(tags);
    return out;
}

Json certificate_json(const Multigraph& h, const GoodSubgraphCertificate& cert)
{
    auto arc_json = [&](const Arc& a) { return Json::array({a.tail, a.head, a.edge}); };
    Json out;
    out["q_vertices"] = vertices_json(cert.q_vertices);
    out["q_edges"] = edges_json(h, cert.q_edges);
    out["e_set"] = edges_json(h, cert.e_set);
    Json arcs = Json::array();
    for (const auto& a : cert.arcs)
        arcs.push_back(arc_json(a));
    out["arcs"] = std::move(arcs);
    Json paths = Json::array();
    for (const auto& [start, edges] : cert.paths) {
        Json p;
        p["start"] = start;
        Json steps = Json::array();
        for (auto e : edges)
            for (const auto& a : cert.arcs)
                if (a.edge == e)
                    steps.push_back(arc_json(a));
        p["arcs"] = std::move(steps);
        paths.push_back(std::move(p));
    }
    out["paths"] = std::move(paths);
    return out;
}

} // namespace dpdp::cli
