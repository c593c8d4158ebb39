#include <dpdp/graph.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace dpdp {

Multigraph::Multigraph(std::size_t vertex_count, std::initializer_list<EdgeEndpoints> edges)
    : Multigraph(vertex_count, std::span<const EdgeEndpoints>(edges.begin(), edges.size()))
{
}

Multigraph::Multigraph(std::size_t vertex_count, std::span<const EdgeEndpoints> edges)
    : vertex_count_(vertex_count), degree_(vertex_count, 0), incidence_(vertex_count), neighbors_(vertex_count)
{
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count)
            throw std::out_of_range("edge endpoint (" + std::to_string(a) + "," + std::to_string(b)
                + ") outside vertex range of size " + std::to_string(vertex_count));
        EdgeRecord rec{static_cast<EdgeId>(edges_.size()), std::min(a, b), std::max(a, b)};
        edges_.push_back(rec);
        incidence_[rec.u].push_back(rec.id);
        degree_[rec.u] += 1;
        degree_[rec.v] += 1;
        neighbors_[rec.u].push_back(rec.v);
        if (!rec.is_loop()) {
            incidence_[rec.v].push_back(rec.id);
            neighbors_[rec.v].push_back(rec.u);
        }
    }
    for (auto& nb : neighbors_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

void Multigraph::check_vertex(Vertex v) const
{
    if (v >= vertex_count_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " + std::to_string(vertex_count_));
}

const EdgeRecord& Multigraph::edge(EdgeId e) const
{
    if (e >= edges_.size())
        throw std::out_of_range("unknown edge id " + std::to_string(e));
    return edges_[e];
}

std::span<const EdgeId> Multigraph::incident_edges(Vertex v) const
{
    check_vertex(v);
    return incidence_[v];
}

std::span<const Vertex> Multigraph::neighbors(Vertex v) const
{
    check_vertex(v);
    return neighbors_[v];
}

std::size_t Multigraph::degree(Vertex v) const
{
    check_vertex(v);
    return degree_[v];
}

bool Multigraph::has_loop(Vertex v) const
{
    check_vertex(v);
    return std::binary_search(neighbors_[v].begin(), neighbors_[v].end(), v);
}

bool Multigraph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(neighbors_[u].begin(), neighbors_[u].end(), v);
}

std::size_t Multigraph::multiplicity(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    std::size_t count = 0;
    for (auto e : incidence_[u])
        if (edges_[e].other(u) == v)
            ++count;
    return count;
}

bool Multigraph::is_simple() const
{
    for (Vertex v = 0; v < vertex_count_; ++v) {
        if (has_loop(v) || neighbors_[v].size() != incidence_[v].size())
            return false;
    }
    return true;
}

std::vector<EdgeEndpoints> Multigraph::endpoint_list() const
{
    std::vector<EdgeEndpoints> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_)
        out.emplace_back(e.u, e.v);
    return out;
}

std::size_t degree(const Multigraph& g, Vertex v) { return g.degree(v); }

VertexSet leaves(const Multigraph& g)
{
    VertexSet out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1)
            out.insert(v);
    return out;
}

VertexSet leaves_at(const Multigraph& g, Vertex s)
{
    VertexSet out(g.vertex_count());
    for (auto w : g.neighbors(s))
        if (g.degree(w) == 1)
            out.insert(w);
    return out;
}

namespace {

    template <typename Pred>
    VertexSet supports_where(const Multigraph& g, Pred keep)
    {
        VertexSet out(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::size_t leaf_neighbors = 0;
            for (auto w : g.neighbors(v))
                if (g.degree(w) == 1)
                    ++leaf_neighbors;
            if (keep(leaf_neighbors))
                out.insert(v);
        }
        return out;
    }

} // namespace

VertexSet supports(const Multigraph& g)
{
    return supports_where(g, [](std::size_t k) { return k >= 1; });
}

VertexSet strong_supports(const Multigraph& g)
{
    return supports_where(g, [](std::size_t k) { return k >= 2; });
}

VertexSet weak_supports(const Multigraph& g)
{
    return supports_where(g, [](std::size_t k) { return k == 1; });
}

VertexSet neighborhood(const Multigraph& g, Vertex v)
{
    VertexSet out(g.vertex_count());
    for (auto w : g.neighbors(v))
        out.insert(w);
    return out;
}

VertexSet neighborhood(const Multigraph& g, const VertexSet& x)
{
    VertexSet out(g.vertex_count());
    for (auto v : x.members())
        for (auto w : g.neighbors(v))
            out.insert(w);
    return out;
}

VertexSet closed_neighborhood(const Multigraph& g, Vertex v)
{
    auto out = neighborhood(g, v);
    out.insert(v);
    return out;
}

VertexSet closed_neighborhood(const Multigraph& g, const VertexSet& x) { return neighborhood(g, x) | x; }

EdgeDeletion delete_edges(const Multigraph& g, std::span<const EdgeId> removed)
{
    std::vector<bool> drop(g.edge_count(), false);
    for (auto e : removed) {
        if (e >= g.edge_count())
            throw std::out_of_range("unknown edge id " + std::to_string(e));
        drop[e] = true;
    }
    EdgeDeletion out;
    out.new_id_of.assign(g.edge_count(), std::nullopt);
    std::vector<EdgeEndpoints> kept;
    for (const auto& e : g.edges()) {
        if (drop[e.id])
            continue;
        out.new_id_of[e.id] = static_cast<EdgeId>(kept.size());
        out.old_id_of.push_back(e.id);
        kept.emplace_back(e.u, e.v);
    }
    out.graph = Multigraph(g.vertex_count(), kept);
    return out;
}

EdgeDeletion delete_edge(const Multigraph& g, EdgeId e)
{
    const EdgeId ids[] = {e};
    return delete_edges(g, ids);
}

std::vector<VertexSet> connected_components(const Multigraph& g)
{
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        VertexSet comp(g.vertex_count());
        std::deque<Vertex> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (auto w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Multigraph& g) { return connected_components(g).size() <= 1; }

std::optional<std::size_t> distance(const Multigraph& g, Vertex from, Vertex to)
{
    std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
    if (from >= g.vertex_count() || to >= g.vertex_count())
        throw std::out_of_range("distance query outside vertex range");
    std::deque<Vertex> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (v == to)
            return dist[v];
        for (auto w : g.neighbors(v)) {
            if (dist[w] == SIZE_MAX) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

std::size_t max_degree(const Multigraph& g)
{
    std::size_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

bool has_isolated_vertex(const Multigraph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            return true;
    return false;
}

bool is_forest(const Multigraph& g)
{
    if (!g.is_simple())
        return false;
    return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

bool is_tree(const Multigraph& g) { return g.vertex_count() >= 1 && is_forest(g) && is_connected(g); }

Multigraph induced_subgraph(const Multigraph& g, const VertexSet& keep, std::vector<Vertex>* old_vertex_of)
{
    std::vector<Vertex> new_id(g.vertex_count(), 0);
    auto members = keep.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        new_id[members[i]] = static_cast<Vertex>(i);
    std::vector<EdgeEndpoints> kept;
    for (const auto& e : g.edges())
        if (keep.contains(e.u) && keep.contains(e.v))
            kept.emplace_back(new_id[e.u], new_id[e.v]);
    if (old_vertex_of != nullptr)
        *old_vertex_of = members;
    return Multigraph(members.size(), kept);
}

Multigraph spanning_subgraph(const Multigraph& g, std::span<const EdgeId> keep)
{
    std::vector<bool> take(g.edge_count(), false);
    for (auto e : keep)
        take[g.edge(e).id] = true;
    std::vector<EdgeEndpoints> kept;
    for (const auto& e : g.edges())
        if (take[e.id])
            kept.emplace_back(e.u, e.v);
    return Multigraph(g.vertex_count(), kept);
}

} // namespace dpdp
