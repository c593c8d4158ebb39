#include <dpdp/subdivision.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dpdp {

std::map<VertexTag, Vertex> S2Labeling::index() const
{
    std::map<VertexTag, Vertex> out;
    for (std::size_t v = 0; v < provenance.size(); ++v)
        out.emplace(provenance[v], static_cast<Vertex>(v));
    return out;
}

VertexSet S2Labeling::old_vertices() const
{
    VertexSet out(provenance.size());
    for (std::size_t v = 0; v < provenance.size(); ++v)
        if (!is_new(provenance[v]))
            out.insert(static_cast<Vertex>(v));
    return out;
}

VertexSet S2Labeling::new_vertices() const { return old_vertices().complement(); }

namespace {

    LeafMultiplicity resolve_alpha(const Multigraph& base, const LeafMultiplicity& alpha)
    {
        for (Vertex v = 0; v < base.vertex_count(); ++v)
            if (base.degree(v) == 0)
                throw std::invalid_argument("base graph has isolated vertex " + std::to_string(v));
        for (auto [leaf, count] : alpha) {
            if (leaf >= base.vertex_count() || base.degree(leaf) != 1)
                throw std::invalid_argument("alpha key " + std::to_string(leaf) + " is not a leaf of the base graph");
            if (count < 1)
                throw std::invalid_argument("alpha value for leaf " + std::to_string(leaf) + " must be at least 1");
        }
        LeafMultiplicity full;
        for (Vertex v = 0; v < base.vertex_count(); ++v) {
            if (base.degree(v) != 1)
                continue;
            auto it = alpha.find(v);
            full[v] = it == alpha.end() ? 1 : it->second;
        }
        return full;
    }

} // namespace

std::size_t s2_order(const Multigraph& base, const LeafMultiplicity& alpha)
{
    auto full = resolve_alpha(base, alpha);
    std::size_t count = 2 * base.edge_count();
    for (Vertex v = 0; v < base.vertex_count(); ++v)
        count += base.degree(v) == 1 ? full.at(v) : 1;
    return count;
}

S2Build build_s2(const Multigraph& base, const LeafMultiplicity& alpha)
{
    S2Labeling lab{base, resolve_alpha(base, alpha), {}};

    // Representatives of each base vertex: the old vertex, or all leaf copies.
    std::vector<std::vector<Vertex>> rep(base.vertex_count());
    for (Vertex v = 0; v < base.vertex_count(); ++v) {
        if (base.degree(v) == 1) {
            for (std::size_t i = 1; i <= lab.alpha.at(v); ++i) {
                rep[v].push_back(static_cast<Vertex>(lab.provenance.size()));
                lab.provenance.emplace_back(LeafCopyTag{v, i});
            }
        } else {
            rep[v].push_back(static_cast<Vertex>(lab.provenance.size()));
            lab.provenance.emplace_back(OldTag{v});
        }
    }
    std::vector<EdgeEndpoints> edges;
    for (const auto& e : base.edges()) {
        auto x = static_cast<Vertex>(lab.provenance.size());
        lab.provenance.emplace_back(NewTag{e.id, 1});
        auto y = static_cast<Vertex>(lab.provenance.size());
        lab.provenance.emplace_back(NewTag{e.id, 2});
        edges.emplace_back(x, y);
        for (auto r : rep[e.u])
            edges.emplace_back(x, r);
        for (auto r : rep[e.v])
            edges.emplace_back(y, r);
    }
    Multigraph g(lab.provenance.size(), edges);
    return S2Build{std::move(g), std::move(lab)};
}

std::optional<EdgeId> edge_between(const Multigraph& g, Vertex a, Vertex b)
{
    for (auto id : g.incident_edges(a))
        if (g.edge(id).other(a) == b)
            return id;
    return std::nullopt;
}

DpPair canonical_dp_pair(const Multigraph& g, const S2Labeling& labeling)
{
    if (labeling.provenance.size() != g.vertex_count())
        throw std::invalid_argument("labeling does not match graph order");
    DpPair pair{labeling.old_vertices(), labeling.new_vertices(), {}};
    auto idx = labeling.index();
    for (const auto& e : labeling.base.edges()) {
        auto x = idx.at(NewTag{e.id, 1});
        auto y = idx.at(NewTag{e.id, 2});
        auto id = edge_between(g, x, y);
        if (!id)
            throw std::invalid_argument("middle edge of base edge " + std::to_string(e.id) + " missing");
        pair.matching.push_back(*id);
    }
    std::sort(pair.matching.begin(), pair.matching.end());
    return pair;
}

bool labeling_reproduces(const Multigraph& g, const S2Labeling& labeling)
{
    if (labeling.provenance.size() != g.vertex_count())
        return false;
    S2Build rebuilt;
    try {
        rebuilt = build_s2(labeling.base, labeling.alpha);
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (rebuilt.graph.vertex_count() != g.vertex_count() || rebuilt.graph.edge_count() != g.edge_count())
        return false;
    auto rebuilt_index = rebuilt.labeling.index();
    std::vector<Vertex> to_rebuilt(g.vertex_count());
    std::vector<bool> hit(g.vertex_count(), false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto it = rebuilt_index.find(labeling.provenance[v]);
        if (it == rebuilt_index.end() || hit[it->second])
            return false;
        to_rebuilt[v] = it->second;
        hit[it->second] = true;
    }
    auto normalized = [](Vertex a, Vertex b) { return EdgeEndpoints{std::min(a, b), std::max(a, b)}; };
    std::vector<EdgeEndpoints> mine;
    for (const auto& e : g.edges())
        mine.push_back(normalized(to_rebuilt[e.u], to_rebuilt[e.v]));
    auto theirs = rebuilt.graph.endpoint_list();
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    return mine == theirs;
}

namespace {

    enum class Role : std::int8_t { unknown = -1, old_side = 0, new_side = 1 };

    // Splits V(G) into old vertices (an independent set) and new vertices
    // (inducing a perfect matching). Every new vertex sees either exactly one
    // non-leaf old vertex or only leaves on the old side.
    class InversionSearch {
    public:
        explicit InversionSearch(const Multigraph& g) : g_(g), n_(g.vertex_count()), role_(n_, Role::unknown)
        {
            for (Vertex v = 0; v < n_; ++v)
                is_leaf_.push_back(g.degree(v) == 1);
        }

        std::optional<std::vector<Role>> run()
        {
            if (assign_from(0))
                return role_;
            return std::nullopt;
        }

    private:
        bool consistent(Vertex x) const
        {
            std::size_t new_nb = 0, old_leaf = 0, old_inner = 0, unknown = 0;
            for (auto w : g_.neighbors(x)) {
                switch (role_[w]) {
                case Role::unknown:
                    ++unknown;
                    break;
                case Role::new_side:
                    ++new_nb;
                    break;
                case Role::old_side:
                    ++(is_leaf_[w] ? old_leaf : old_inner);
                    break;
                }
            }
            switch (role_[x]) {
            case Role::unknown:
                return true;
            case Role::old_side:
                return old_leaf + old_inner == 0;
            case Role::new_side:
                if (new_nb > 1 || old_inner > 1 || (old_inner == 1 && old_leaf > 0))
                    return false;
                if (unknown == 0)
                    return new_nb == 1 && old_leaf + old_inner >= 1;
                return true;
            }
            return false;
        }

        bool try_role(Vertex v, Role r)
        {
            if (is_leaf_[v] && r != Role::old_side)
                return false;
            role_[v] = r;
            bool ok = consistent(v);
            for (auto w : g_.neighbors(v))
                ok = ok && consistent(w);
            if (ok && assign_from(v + 1))
                return true;
            role_[v] = Role::unknown;
            return false;
        }

        bool assign_from(Vertex v)
        {
            if (v == n_)
                return true;
            return try_role(v, Role::old_side) || try_role(v, Role::new_side);
        }

        const Multigraph& g_;
        std::size_t n_;
        std::vector<Role> role_;
        std::vector<bool> is_leaf_;
    };

} // namespace

std::optional<S2Labeling> invert_s2(const Multigraph& g)
{
    auto n = g.vertex_count();
    if (!g.is_simple() || has_isolated_vertex(g))
        return std::nullopt;
    auto roles = InversionSearch(g).run();
    if (!roles)
        return std::nullopt;
    const auto& role = *roles;

    // Base vertex of every old vertex; leaves sharing a support form one base leaf.
    constexpr Vertex none = UINT32_MAX;
    std::vector<Vertex> base_of(n, none);
    std::vector<Vertex> support_group(n, none); // support -> base leaf
    Vertex next_base = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (role[v] != Role::old_side)
            continue;
        if (g.degree(v) == 1) {
            auto s = g.neighbors(v)[0];
            if (support_group[s] == none)
                support_group[s] = next_base++;
            base_of[v] = support_group[s];
        } else {
            base_of[v] = next_base++;
        }
    }
    // The base vertex a new vertex attaches to.
    auto attachment = [&](Vertex x) {
        for (auto w : g.neighbors(x))
            if (role[w] == Role::old_side)
                return base_of[w];
        throw std::logic_error("new vertex without old neighbour");
    };
    auto partner = [&](Vertex x) {
        for (auto w : g.neighbors(x))
            if (role[w] == Role::new_side)
                return w;
        throw std::logic_error("new vertex without partner");
    };

    S2Labeling lab;
    lab.provenance.assign(n, OldTag{});
    std::vector<EdgeEndpoints> base_edges;
    for (Vertex x = 0; x < n; ++x) {
        if (role[x] != Role::new_side)
            continue;
        auto y = partner(x);
        if (y < x)
            continue;
        auto a = attachment(x);
        auto b = attachment(y);
        auto id = static_cast<EdgeId>(base_edges.size());
        base_edges.emplace_back(a, b);
        // Side 1 sits at the lower base endpoint.
        if (b < a)
            std::swap(x, y);
        lab.provenance[x] = NewTag{id, 1};
        lab.provenance[y] = NewTag{id, 2};
    }
    lab.base = Multigraph(next_base, base_edges);

    std::vector<std::size_t> copies(next_base, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (role[v] != Role::old_side)
            continue;
        if (g.degree(v) == 1) {
            auto leaf = base_of[v];
            lab.provenance[v] = LeafCopyTag{leaf, ++copies[leaf]};
            lab.alpha[leaf] = copies[leaf];
        } else {
            lab.provenance[v] = OldTag{base_of[v]};
        }
    }
    if (!labeling_reproduces(g, lab))
        throw std::logic_error("inverted labeling does not reproduce the graph");
    return lab;
}

bool is_2_subdivision(const Multigraph& g) { return invert_s2(g).has_value(); }

} // namespace dpdp
