#include <dpdp/minimality.hpp>

#include <algorithm>
#include <stdexcept>

namespace dpdp {

namespace {

    // Whether `pair` of g still works once edge e is gone.
    bool pair_survives_deletion(const Multigraph& g, const DpPair& pair, EdgeId e)
    {
        if (std::binary_search(pair.matching.begin(), pair.matching.end(), e))
            return false;
        const auto& rec = g.edge(e);
        if (rec.is_loop())
            return true;
        // A cross edge may be the only domination link for one of its ends.
        bool cross = pair.d.contains(rec.u) != pair.d.contains(rec.v);
        if (!cross)
            return true;
        auto still_linked = [&](Vertex x, Vertex lost) {
            const auto& other_side = pair.d.contains(x) ? pair.p : pair.d;
            for (auto w : g.neighbors(x))
                if (w != lost && other_side.contains(w))
                    return true;
            return g.multiplicity(x, lost) > 1;
        };
        return still_linked(rec.u, rec.v) && still_linked(rec.v, rec.u);
    }

    DpPair remap_matching(const DpPair& pair, const EdgeDeletion& deletion)
    {
        DpPair out{pair.d, pair.p, {}};
        for (auto e : pair.matching)
            out.matching.push_back(*deletion.new_id_of.at(e));
        std::sort(out.matching.begin(), out.matching.end());
        return out;
    }

} // namespace

std::optional<DeletionWitness> find_deletion_witness(const Multigraph& g)
{
    auto base = find_dp_pair(g);
    if (!base)
        return std::nullopt;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto deletion = delete_edge(g, e);
        if (pair_survives_deletion(g, *base, e)) {
            auto pair = remap_matching(*base, deletion);
            if (is_dp_pair(deletion.graph, pair))
                return DeletionWitness{e, std::move(pair)};
        }
        if (auto pair = find_dp_pair(deletion.graph))
            return DeletionWitness{e, std::move(*pair)};
    }
    return std::nullopt;
}

bool is_minimal_by_deletion(const Multigraph& g) { return is_dpdp(g) && !find_deletion_witness(g).has_value(); }

std::optional<ReduciblePattern> check_reducible_pattern(const Multigraph& h)
{
    auto other_neighbor = [&](Vertex x, Vertex y) -> std::optional<Vertex> {
        // N(x) \ {y} as a single vertex.
        std::optional<Vertex> found;
        for (auto w : h.neighbors(x)) {
            if (w == y)
                continue;
            if (found)
                return std::nullopt;
            found = w;
        }
        return found;
    };
    auto has_more = [&](Vertex z, Vertex x, Vertex y) {
        for (auto w : h.neighbors(z))
            if (w != x && w != y)
                return true;
        return false;
    };
    for (Vertex x = 0; x < h.vertex_count(); ++x) {
        if (h.degree(x) != 2)
            continue;
        for (auto y : h.neighbors(x)) {
            if (y == x || h.degree(y) != 2)
                continue;
            auto xo = other_neighbor(x, y);
            auto yo = other_neighbor(y, x);
            if (!xo || !yo)
                continue;
            if (has_more(*xo, x, y) && has_more(*yo, x, y))
                return ReduciblePattern{x, y, *xo, *yo};
        }
    }
    return std::nullopt;
}

std::optional<Multigraph> minimal_spanning_dpdp_subgraph(const Multigraph& g)
{
    if (!is_dpdp(g))
        return std::nullopt;
    // A non-removable edge stays non-removable after later deletions, so one
    // pass in id order reaches a minimal subgraph.
    std::vector<EdgeId> kept;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        kept.push_back(e);
    std::size_t pos = 0;
    while (pos < kept.size()) {
        std::vector<EdgeId> trial;
        for (std::size_t i = 0; i < kept.size(); ++i)
            if (i != pos)
                trial.push_back(kept[i]);
        if (is_dpdp(spanning_subgraph(g, trial)))
            kept = std::move(trial);
        else
            ++pos;
    }
    auto out = spanning_subgraph(g, kept);
    if (!is_minimal_by_deletion(out))
        throw std::logic_error("greedy extraction did not reach a minimal subgraph");
    return out;
}

bool is_exceptional_cycle(const Multigraph& g)
{
    auto n = g.vertex_count();
    if (n != 3 && n != 6 && n != 9)
        return false;
    if (!g.is_simple() || !is_connected(g))
        return false;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

std::vector<std::string> minimal_pair_structure_violations(const Multigraph& g, const DpPair& pair)
{
    std::vector<std::string> out;
    for (const auto& e : g.edges())
        if (pair.d.contains(e.u) && pair.d.contains(e.v)) {
            out.push_back("D is not independent (edge " + std::to_string(e.id) + ")");
            break;
        }
    if (!is_dominating(g, pair.d))
        out.push_back("D is not dominating");
    for (auto x : pair.p.members()) {
        std::size_t p_edges = 0;
        for (auto e : g.incident_edges(x)) {
            const auto& rec = g.edge(e);
            if (pair.p.contains(rec.other(x)))
                p_edges += rec.is_loop() ? 2 : 1;
        }
        if (p_edges != 1) {
            out.push_back("G[P] is not 1-regular at " + std::to_string(x));
            break;
        }
    }
    for (auto x : pair.p.members()) {
        std::size_t outside = 0;
        bool all_leaves = true;
        for (auto w : g.neighbors(x)) {
            if (pair.p.contains(w))
                continue;
            ++outside;
            all_leaves = all_leaves && g.degree(w) == 1;
        }
        if (!(outside == 1 || (outside >= 1 && all_leaves))) {
            out.push_back("P vertex " + std::to_string(x) + " has a bad outside neighbourhood");
            break;
        }
    }
    return out;
}

MinimalityReport classify(const Multigraph& g, std::size_t pair_cap)
{
    MinimalityReport r;
    r.is_dpdp = is_dpdp(g);
    r.minimal_by_deletion = r.is_dpdp && is_minimal_by_deletion(g);
    r.inversion = invert_s2(g);
    r.exceptional_cycle = is_exceptional_cycle(g);
    auto pairs = r.is_dpdp ? enumerate_dp_pairs(g, std::max<std::size_t>(pair_cap, 2)) : std::vector<DpPair>{};
    r.dp_pair_count_capped = std::min(pairs.size(), pair_cap);
    bool char_unique = false;
    bool char_no_good = false;
    if (r.inversion) {
        auto canonical = canonical_dp_pair(g, *r.inversion);
        r.canonical_pair_unique = pairs.size() == 1 && same_partition(pairs.front(), canonical);
        char_unique = r.canonical_pair_unique || r.exceptional_cycle;
        if (!has_isolated_vertex(r.inversion->base)) {
            r.good_subgraph = find_good_subgraph(r.inversion->base);
            char_no_good = !r.good_subgraph.has_value();
        }
    }
    // The three characterizations only speak about connected graphs of order >= 3.
    if (is_connected(g) && g.vertex_count() >= 3)
        r.verdicts_consistent = r.minimal_by_deletion == char_unique && char_unique == char_no_good;
    else
        r.verdicts_consistent = true;
    return r;
}

XcheckResult xcheck(const Multigraph& h, const LeafMultiplicity& alpha)
{
    if (h.edge_count() == 0 || has_isolated_vertex(h) || !is_connected(h))
        throw std::invalid_argument("xcheck needs a connected base graph with at least one edge");
    XcheckResult r;
    auto built = build_s2(h, alpha);
    const auto& g = built.graph;

    r.minimal_by_deletion = is_minimal_by_deletion(g);
    r.good_subgraph = find_good_subgraph(h);
    r.no_good_subgraph = !r.good_subgraph.has_value();
    auto canonical = canonical_dp_pair(g, built.labeling);
    if (!is_dp_pair(g, canonical))
        r.failures.push_back("canonical pair of S2(H) does not verify");
    auto pairs = enumerate_dp_pairs(g, 2);
    bool unique = pairs.size() == 1 && same_partition(pairs.front(), canonical);
    r.unique_canonical_or_cycle = unique || is_exceptional_cycle(g);

    if (r.minimal_by_deletion != r.no_good_subgraph)
        r.failures.push_back("deletion test and good-subgraph search disagree");
    if (r.minimal_by_deletion != r.unique_canonical_or_cycle)
        r.failures.push_back("deletion test and pair uniqueness disagree");

    if (r.good_subgraph) {
        try {
            auto plan = reduce_via_good_subgraph(h, alpha, *r.good_subgraph);
            (void)plan;
        } catch (const std::exception& ex) {
            r.failures.push_back(std::string("constructive reduction failed: ") + ex.what());
        }
    }
    auto pattern = check_reducible_pattern(h);
    r.reducible_pattern = pattern.has_value();
    if (pattern && r.minimal_by_deletion)
        r.failures.push_back("reducible pattern present but S2(H) is minimal");

    auto inverted = invert_s2(g);
    if (!inverted)
        r.failures.push_back("S2(H) is not recognized as a 2-subdivision graph");

    if (r.minimal_by_deletion) {
        for (const auto& pair : enumerate_dp_pairs(g, 64))
            for (auto& why : minimal_pair_structure_violations(g, pair))
                r.failures.push_back("minimal pair structure: " + why);
    }
    return r;
}

} // namespace dpdp
