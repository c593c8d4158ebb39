#include <dpdp/good_subgraph.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dpdp {

namespace {

    std::size_t q_degree(const Multigraph& h, const std::vector<bool>& in_q, Vertex v)
    {
        std::size_t d = 0;
        for (auto e : h.incident_edges(v))
            if (in_q[e])
                d += h.edge(e).is_loop() ? 2 : 1;
        return d;
    }

    std::vector<bool> edge_mask(const Multigraph& h, const std::vector<EdgeId>& ids)
    {
        std::vector<bool> mask(h.edge_count(), false);
        for (auto e : ids)
            mask[e] = true;
        return mask;
    }

    void check_ids(const Multigraph& h, const GoodSubgraphCertificate& cert)
    {
        auto n = h.vertex_count();
        auto m = h.edge_count();
        auto bad_edge = [&](EdgeId e) { return e >= m; };
        if (cert.q_vertices.universe() != n)
            throw std::invalid_argument("certificate vertex set does not match host order");
        if (std::any_of(cert.q_edges.begin(), cert.q_edges.end(), bad_edge)
            || std::any_of(cert.e_set.begin(), cert.e_set.end(), bad_edge))
            throw std::invalid_argument("certificate references unknown edge id");
        for (const auto& a : cert.arcs)
            if (a.edge >= m || a.tail >= n || a.head >= n)
                throw std::invalid_argument("certificate arc references unknown id");
        for (const auto& [v, path] : cert.paths) {
            if (v >= n)
                throw std::invalid_argument("certificate path indexed by unknown vertex");
            if (std::any_of(path.begin(), path.end(), bad_edge))
                throw std::invalid_argument("certificate path references unknown edge id");
        }
    }

    template <typename T>
    bool has_duplicates(std::vector<T> v)
    {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    }

} // namespace

std::vector<EdgeId> edge_boundary(const Multigraph& h, const VertexSet& q_vertices, const std::vector<EdgeId>& q_edges)
{
    auto in_q = edge_mask(h, q_edges);
    std::vector<EdgeId> out;
    for (const auto& e : h.edges())
        if (!in_q[e.id] && (q_vertices.contains(e.u) || q_vertices.contains(e.v)))
            out.push_back(e.id);
    return out;
}

std::optional<std::string> good_certificate_violation(const Multigraph& h, const GoodSubgraphCertificate& cert)
{
    check_ids(h, cert);
    auto n = h.vertex_count();
    const auto& qv = cert.q_vertices;

    if (qv.empty())
        return "Q is empty";
    if (has_duplicates(cert.q_edges))
        return "Q lists an edge twice";
    auto in_q = edge_mask(h, cert.q_edges);
    for (auto e : cert.q_edges)
        if (!qv.contains(h.edge(e).u) || !qv.contains(h.edge(e).v))
            return "Q edge " + std::to_string(e) + " has an endpoint outside Q";
    for (auto v : qv.members())
        if (q_degree(h, in_q, v) == 0)
            return "Q has isolated vertex " + std::to_string(v);

    if (has_duplicates(cert.e_set))
        return "E lists an edge twice";
    auto in_e = edge_mask(h, cert.e_set);
    for (auto e : cert.e_set)
        if (in_q[e])
            return "E contains Q edge " + std::to_string(e);
    for (auto e : edge_boundary(h, qv, cert.q_edges))
        if (!in_e[e])
            return "E misses boundary edge " + std::to_string(e);

    std::vector<const Arc*> arc_of(h.edge_count(), nullptr);
    for (const auto& a : cert.arcs) {
        if (!in_e[a.edge])
            return "arc on edge " + std::to_string(a.edge) + " outside E";
        if (arc_of[a.edge] != nullptr)
            return "edge " + std::to_string(a.edge) + " oriented twice";
        const auto& rec = h.edge(a.edge);
        bool matches = rec.is_loop() ? (a.tail == rec.u && a.head == rec.u)
                                     : ((a.tail == rec.u && a.head == rec.v) || (a.tail == rec.v && a.head == rec.u));
        if (!matches)
            return "arc endpoints do not match edge " + std::to_string(a.edge);
        arc_of[a.edge] = &a;
    }
    for (auto e : cert.e_set)
        if (arc_of[e] == nullptr)
            return "edge " + std::to_string(e) + " of E has no arc";

    for (const auto& [v, path] : cert.paths)
        if (!qv.contains(v))
            return "path indexed by vertex " + std::to_string(v) + " outside Q";
    std::vector<bool> arc_used(h.edge_count(), false);
    std::vector<bool> inner(n, false);
    std::vector<Vertex> ends;
    for (auto v : qv.members()) {
        auto it = cert.paths.find(v);
        if (it == cert.paths.end() || it->second.empty())
            return "Q vertex " + std::to_string(v) + " starts no path";
        const auto& path = it->second;
        std::vector<Vertex> visited{v};
        Vertex at = v;
        for (std::size_t i = 0; i < path.size(); ++i) {
            auto e = path[i];
            if (arc_of[e] == nullptr)
                return "path of " + std::to_string(v) + " uses unoriented edge " + std::to_string(e);
            if (arc_used[e])
                return "arc on edge " + std::to_string(e) + " used by two paths";
            arc_used[e] = true;
            const auto& a = *arc_of[e];
            if (a.tail != at)
                return "path of " + std::to_string(v) + " breaks at edge " + std::to_string(e);
            if (i > 0)
                inner[at] = true;
            if (std::find(visited.begin(), visited.end(), a.head) != visited.end()) {
                if (i + 1 != path.size())
                    return "path of " + std::to_string(v) + " revisits vertex " + std::to_string(a.head)
                        + " before its last arc";
            } else {
                visited.push_back(a.head);
            }
            at = a.head;
        }
        ends.push_back(at);
    }
    for (auto e : cert.e_set)
        if (!arc_used[e])
            return "arc on edge " + std::to_string(e) + " lies on no path";

    std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
    for (const auto& a : cert.arcs) {
        out_deg[a.tail] += 1;
        in_deg[a.head] += 1;
    }
    for (auto v : qv.members()) {
        auto d = h.degree(v);
        auto dq = q_degree(h, in_q, v);
        if (out_deg[v] != 1 || in_deg[v] + dq + 1 != d)
            return "condition (1) fails at Q vertex " + std::to_string(v);
    }
    for (Vertex x = 0; x < n; ++x)
        if (inner[x] && (out_deg[x] != 1 || in_deg[x] + 1 != h.degree(x)))
            return "condition (2) fails at inner vertex " + std::to_string(x);
    for (auto x : ends)
        if (in_deg[x] >= h.degree(x))
            return "condition (3) fails at end vertex " + std::to_string(x);
    return std::nullopt;
}

bool verify_good_certificate(const Multigraph& h, const GoodSubgraphCertificate& cert)
{
    return !good_certificate_violation(h, cert).has_value();
}

namespace {

    // Grows one oriented path per Q vertex, in vertex order. At each head the
    // path first tries to stop, then to continue along edges by id.
    class PathFamilySearch {
    public:
        PathFamilySearch(const Multigraph& h, const std::vector<EdgeId>& q_edges)
            : h_(h), q_edges_(q_edges), in_q_(edge_mask(h, q_edges)), in_qv_(h.vertex_count(), false),
              out_(h.vertex_count(), 0), in_(h.vertex_count(), 0), limit_(h.vertex_count(), 0),
              on_path_(h.vertex_count(), 0), used_(h.edge_count(), false)
        {
            std::sort(q_edges_.begin(), q_edges_.end());
            for (auto e : q_edges_) {
                in_qv_[h.edge(e).u] = true;
                in_qv_[h.edge(e).v] = true;
            }
            for (Vertex v = 0; v < h.vertex_count(); ++v) {
                if (in_qv_[v])
                    starts_.push_back(v);
                auto d = static_cast<long>(h.degree(v));
                limit_[v] = in_qv_[v] ? d - static_cast<long>(q_degree(h, in_q_, v)) - 1 : d - 1;
            }
        }

        std::optional<GoodSubgraphCertificate> run()
        {
            if (starts_.empty())
                return std::nullopt;
            for (auto v : starts_)
                if (limit_[v] < 0)
                    return std::nullopt;
            if (grow(0))
                return result_;
            return std::nullopt;
        }

    private:
        bool grow(std::size_t qi)
        {
            if (qi == starts_.size())
                return finish();
            auto v = starts_[qi];
            current_.clear();
            on_path_[v] += 1;
            for (auto e : h_.incident_edges(v)) {
                if (in_q_[e] || used_[e])
                    continue;
                if (push(e, v) && extend(qi, h_.edge(e).other(v), h_.edge(e).is_loop()))
                    return true;
                pop(e, v);
            }
            on_path_[v] -= 1;
            return false;
        }

        // A closed path has just returned to one of its own vertices.
        bool extend(std::size_t qi, Vertex at, bool closed)
        {
            // Stop here.
            if (in_[at] < static_cast<long>(h_.degree(at))) {
                auto saved = current_;
                paths_[starts_[qi]] = current_;
                set_path_marks(starts_[qi], saved, -1);
                if (grow(qi + 1))
                    return true;
                set_path_marks(starts_[qi], saved, 1);
                current_ = saved;
                paths_.erase(starts_[qi]);
            }
            // Continue through `at`.
            if (closed || in_qv_[at] || out_[at] != 0)
                return false;
            for (auto e : h_.incident_edges(at)) {
                if (in_q_[e] || used_[e])
                    continue;
                const auto& rec = h_.edge(e);
                auto next = rec.other(at);
                bool closes = on_path_[next] > 0;
                if (push(e, at) && extend(qi, next, closes))
                    return true;
                pop(e, at);
            }
            return false;
        }

        bool push(EdgeId e, Vertex tail)
        {
            auto head = h_.edge(e).other(tail);
            used_[e] = true;
            out_[tail] += 1;
            in_[head] += 1;
            current_.push_back(e);
            on_path_[head] += 1;
            return in_[head] <= limit_[head];
        }

        void pop(EdgeId e, Vertex tail)
        {
            auto head = h_.edge(e).other(tail);
            used_[e] = false;
            out_[tail] -= 1;
            in_[head] -= 1;
            current_.pop_back();
            on_path_[head] -= 1;
        }

        void set_path_marks(Vertex start, const std::vector<EdgeId>& path, int delta)
        {
            on_path_[start] += delta;
            Vertex at = start;
            for (auto e : path) {
                at = h_.edge(e).other(at);
                on_path_[at] += delta;
            }
        }

        bool finish()
        {
            GoodSubgraphCertificate cert;
            cert.q_vertices = VertexSet(h_.vertex_count());
            for (auto v : starts_)
                cert.q_vertices.insert(v);
            cert.q_edges = q_edges_;
            cert.paths = paths_;
            for (EdgeId e = 0; e < h_.edge_count(); ++e)
                if (used_[e])
                    cert.e_set.push_back(e);
            for (const auto& [start, path] : paths_) {
                Vertex at = start;
                for (auto e : path) {
                    auto head = h_.edge(e).other(at);
                    cert.arcs.push_back(Arc{e, at, head});
                    at = head;
                }
            }
            std::sort(cert.arcs.begin(), cert.arcs.end(), [](const Arc& a, const Arc& b) { return a.edge < b.edge; });
            if (good_certificate_violation(h_, cert))
                return false;
            result_ = std::move(cert);
            return true;
        }

        const Multigraph& h_;
        std::vector<EdgeId> q_edges_;
        std::vector<bool> in_q_;
        std::vector<bool> in_qv_;
        std::vector<Vertex> starts_;
        std::vector<long> out_, in_, limit_;
        std::vector<int> on_path_;
        std::vector<bool> used_;
        std::vector<EdgeId> current_;
        std::map<Vertex, std::vector<EdgeId>> paths_;
        GoodSubgraphCertificate result_;
    };

    bool edges_connected(const Multigraph& h, const std::vector<EdgeId>& edges)
    {
        return edge_components(h, edges).size() <= 1;
    }

} // namespace

std::vector<std::vector<EdgeId>> edge_components(const Multigraph& h, const std::vector<EdgeId>& edges)
{
    std::vector<Vertex> parent(h.vertex_count());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto e : edges) {
        auto a = find(h.edge(e).u);
        auto b = find(h.edge(e).v);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<Vertex, std::vector<EdgeId>> by_root;
    for (auto e : edges)
        by_root[find(h.edge(e).u)].push_back(e);
    // Roots are the smallest vertex of each component.
    std::vector<std::vector<EdgeId>> out;
    for (auto& [root, comp] : by_root) {
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<GoodSubgraphCertificate> find_certificate_for(const Multigraph& h, const std::vector<EdgeId>& q_edges)
{
    for (auto e : q_edges)
        h.edge(e);
    return PathFamilySearch(h, q_edges).run();
}

std::optional<GoodSubgraphCertificate> find_good_subgraph(const Multigraph& h)
{
    if (has_isolated_vertex(h))
        throw std::invalid_argument("good-subgraph search needs a graph without isolated vertices");
    auto excluded = leaves(h) | supports(h);
    std::vector<EdgeId> candidates;
    for (const auto& e : h.edges())
        if (!excluded.contains(e.u) && !excluded.contains(e.v))
            candidates.push_back(e.id);
    auto k = candidates.size();
    for (bool want_connected : {true, false}) {
        for (std::size_t size = 1; size <= k; ++size) {
            std::vector<std::size_t> pick(size);
            std::iota(pick.begin(), pick.end(), std::size_t{0});
            while (true) {
                std::vector<EdgeId> q;
                for (auto i : pick)
                    q.push_back(candidates[i]);
                if (edges_connected(h, q) == want_connected)
                    if (auto cert = PathFamilySearch(h, q).run())
                        return cert;
                // Next combination in lexicographic order.
                std::size_t i = size;
                while (i > 0 && pick[i - 1] == k - size + (i - 1))
                    --i;
                if (i == 0)
                    break;
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

ReductionPlan reduce_via_good_subgraph(const Multigraph& h, const LeafMultiplicity& alpha, const GoodSubgraphCertificate& cert)
{
    if (auto why = good_certificate_violation(h, cert))
        throw std::invalid_argument("certificate does not verify: " + *why);
    ReductionPlan plan;
    plan.s2 = build_s2(h, alpha);
    const auto& g = plan.s2.graph;
    auto idx = plan.s2.labeling.index();
    auto n = g.vertex_count();

    auto old_of = [&](Vertex v) { return idx.at(OldTag{v}); };
    auto reps = [&](Vertex v) {
        std::vector<Vertex> out;
        if (h.degree(v) == 1) {
            for (std::size_t i = 1; i <= plan.s2.labeling.alpha.at(v); ++i)
                out.push_back(idx.at(LeafCopyTag{v, i}));
        } else {
            out.push_back(old_of(v));
        }
        return out;
    };
    auto new_at = [&](EdgeId e, int side) { return idx.at(NewTag{e, side}); };
    auto must_edge = [&](Vertex a, Vertex b) {
        auto id = edge_between(g, a, b);
        if (!id)
            throw std::logic_error("expected subdivision edge is missing");
        return *id;
    };
    // p2 is the subdivision vertex next to the tail, p3 the one next to the head.
    auto p2 = [&](const Arc& a) {
        const auto& rec = h.edge(a.edge);
        return new_at(a.edge, rec.is_loop() || a.tail == rec.u ? 1 : 2);
    };
    auto p3 = [&](const Arc& a) {
        const auto& rec = h.edge(a.edge);
        return new_at(a.edge, rec.is_loop() || a.tail == rec.u ? 2 : 1);
    };

    std::map<EdgeId, Arc> arc_of;
    for (const auto& a : cert.arcs)
        arc_of[a.edge] = a;
    std::vector<bool> has_out(h.vertex_count(), false);
    for (const auto& a : cert.arcs)
        has_out[a.tail] = true;

    std::vector<EdgeId> removed;
    for (auto e : cert.q_edges)
        removed.push_back(must_edge(new_at(e, 1), new_at(e, 2)));
    for (const auto& [start, path] : cert.paths) {
        const auto& last = arc_of.at(path.back());
        removed.push_back(must_edge(p3(last), old_of(last.head)));
    }
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());

    DpPair pair{VertexSet(n), VertexSet(n), {}};
    std::vector<EdgeId> matching;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (!has_out[v])
            for (auto r : reps(v))
                pair.d.insert(r);
    for (const auto& a : cert.arcs) {
        pair.d.insert(p3(a));
        pair.p.insert(old_of(a.tail));
        pair.p.insert(p2(a));
        matching.push_back(must_edge(old_of(a.tail), p2(a)));
    }
    for (auto e : cert.q_edges) {
        pair.d.insert(new_at(e, 1));
        pair.d.insert(new_at(e, 2));
    }
    for (const auto& rec : h.edges()) {
        if (arc_of.contains(rec.id) || has_out[rec.u] || has_out[rec.v])
            continue;
        pair.p.insert(new_at(rec.id, 1));
        pair.p.insert(new_at(rec.id, 2));
        matching.push_back(must_edge(new_at(rec.id, 1), new_at(rec.id, 2)));
    }

    auto deletion = delete_edges(g, removed);
    for (auto e : matching) {
        auto mapped = deletion.new_id_of[e];
        if (!mapped)
            throw std::logic_error("matching edge was removed");
        pair.matching.push_back(*mapped);
    }
    std::sort(pair.matching.begin(), pair.matching.end());
    plan.removed_edges = std::move(removed);
    plan.reduced = std::move(deletion.graph);
    plan.pair = std::move(pair);
    if (plan.removed_edges.empty())
        throw std::logic_error("reduction removed no edge");
    if (auto why = dp_pair_violation(plan.reduced, plan.pair))
        throw std::logic_error("reduction pair does not verify: " + *why);
    return plan;
}

std::optional<VertexSet> tree_find_good_subtree(const Multigraph& h)
{
    if (!is_tree(h))
        throw std::invalid_argument("tree_find_good_subtree needs a tree");
    auto n = h.vertex_count();
    constexpr Vertex none = UINT32_MAX;
    std::vector<Vertex> parent(n, none), order;
    std::vector<std::vector<Vertex>> children(n);
    std::vector<bool> seen(n, false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto v = order[i];
        for (auto w : h.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                children[v].push_back(w);
                order.push_back(w);
            }
    }
    auto non_leaf = [&](Vertex v) { return h.degree(v) >= 2; };

    // with_parent[x]: x in S with its parent in S, so exactly one child is
    // the outside neighbour. without_parent[x]: x in S, parent outside, so
    // every child is in S.
    std::vector<bool> with_parent(n, false), without_parent(n, false);
    std::vector<Vertex> outside_child(n, none);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto x = *it;
        std::vector<Vertex> blocked;
        for (auto c : children[x])
            if (!with_parent[c])
                blocked.push_back(c);
        without_parent[x] = blocked.empty();
        if (blocked.size() == 1 && non_leaf(blocked[0])) {
            with_parent[x] = true;
            outside_child[x] = blocked[0];
        } else if (blocked.empty()) {
            for (auto c : children[x])
                if (non_leaf(c)) {
                    with_parent[x] = true;
                    outside_child[x] = c;
                    break;
                }
        }
    }

    auto collect = [&](Vertex top, bool top_has_outside_child) {
        VertexSet s(n);
        std::vector<std::pair<Vertex, bool>> stack{{top, top_has_outside_child}};
        while (!stack.empty()) {
            auto [x, skip_one] = stack.back();
            stack.pop_back();
            s.insert(x);
            for (auto c : children[x])
                if (!(skip_one && c == outside_child[x]))
                    stack.emplace_back(c, true);
        }
        return s;
    };

    for (Vertex r = 0; r < n; ++r) {
        if (parent[r] == none) {
            if (with_parent[r] && children[r].size() >= 2)
                return collect(r, true);
        } else if (non_leaf(parent[r]) && without_parent[r] && !children[r].empty()) {
            return collect(r, false);
        }
    }
    return std::nullopt;
}

GoodSubgraphCertificate tree_subtree_certificate(const Multigraph& h, const VertexSet& subtree)
{
    GoodSubgraphCertificate cert;
    cert.q_vertices = subtree;
    for (const auto& e : h.edges()) {
        bool in_u = subtree.contains(e.u);
        bool in_v = subtree.contains(e.v);
        if (in_u && in_v) {
            cert.q_edges.push_back(e.id);
        } else if (in_u || in_v) {
            auto tail = in_u ? e.u : e.v;
            cert.e_set.push_back(e.id);
            cert.arcs.push_back(Arc{e.id, tail, e.other(tail)});
            cert.paths[tail].push_back(e.id);
        }
    }
    return cert;
}

std::optional<ComponentReduction> forest_good_decomposition_check(const Multigraph& h, const GoodSubgraphCertificate& cert)
{
    if (!is_forest(h))
        throw std::invalid_argument("forest_good_decomposition_check needs a forest");
    if (auto why = good_certificate_violation(h, cert))
        throw std::invalid_argument("Q is not certified good: " + *why);

    std::map<EdgeId, Arc> arc_of;
    for (const auto& a : cert.arcs)
        arc_of[a.edge] = a;
    auto components = edge_components(h, cert.q_edges);

    // The restriction of the path family to one component first, then a
    // fresh search on that component alone.
    for (std::size_t i = 0; i < components.size(); ++i) {
        GoodSubgraphCertificate part;
        part.q_vertices = VertexSet(h.vertex_count());
        part.q_edges = components[i];
        for (auto e : part.q_edges) {
            part.q_vertices.insert(h.edge(e).u);
            part.q_vertices.insert(h.edge(e).v);
        }
        for (auto v : part.q_vertices.members()) {
            const auto& path = cert.paths.at(v);
            part.paths[v] = path;
            for (auto e : path) {
                part.e_set.push_back(e);
                part.arcs.push_back(arc_of.at(e));
            }
        }
        std::sort(part.e_set.begin(), part.e_set.end());
        std::sort(part.arcs.begin(), part.arcs.end(), [](const Arc& a, const Arc& b) { return a.edge < b.edge; });
        if (verify_good_certificate(h, part))
            return ComponentReduction{i, std::move(part)};
    }
    for (std::size_t i = 0; i < components.size(); ++i)
        if (auto alone = find_certificate_for(h, components[i]))
            return ComponentReduction{i, std::move(*alone)};
    return std::nullopt;
}

} // namespace dpdp
