#include <dpdp/domination.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace dpdp {

bool same_partition(const DpPair& a, const DpPair& b) { return a.d == b.d && a.p == b.p; }

bool is_dominating(const Multigraph& g, const VertexSet& s)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v))
            continue;
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return s.contains(w); }))
            return false;
    }
    return true;
}

namespace {

    struct WordsHash {
        std::size_t operator()(const std::vector<std::uint64_t>& key) const
        {
            std::size_t h = 0xcbf29ce484222325ULL;
            for (auto w : key)
                h = (h ^ w) * 0x100000001b3ULL;
            return h;
        }
    };

    // Exact backtracking pairing: always match the lowest unmatched vertex,
    // remembering unmatched sets already proven unpairable.
    class PairingSearch {
    public:
        PairingSearch(const Multigraph& g, const VertexSet& s) : members_(s.members())
        {
            local_.assign(g.vertex_count(), SIZE_MAX);
            for (std::size_t i = 0; i < members_.size(); ++i)
                local_[members_[i]] = i;
            adj_.resize(members_.size());
            for (const auto& e : g.edges()) {
                if (e.is_loop() || local_[e.u] == SIZE_MAX || local_[e.v] == SIZE_MAX)
                    continue;
                auto a = local_[e.u];
                auto b = local_[e.v];
                add_arc(a, b, e.id);
                add_arc(b, a, e.id);
            }
            for (auto& row : adj_)
                std::sort(row.begin(), row.end());
        }

        std::optional<std::vector<EdgeId>> run()
        {
            if (members_.size() % 2 != 0)
                return std::nullopt;
            std::vector<std::uint64_t> unmatched((members_.size() + 63) / 64, 0);
            for (std::size_t i = 0; i < members_.size(); ++i)
                unmatched[i >> 6] |= std::uint64_t{1} << (i & 63);
            std::vector<EdgeId> chosen;
            if (!solve(unmatched, chosen))
                return std::nullopt;
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }

    private:
        void add_arc(std::size_t from, std::size_t to, EdgeId id)
        {
            for (auto& [nb, eid] : adj_[from])
                if (nb == to) {
                    eid = std::min(eid, id);
                    return;
                }
            adj_[from].emplace_back(to, id);
        }

        static bool test(const std::vector<std::uint64_t>& bits, std::size_t i) { return ((bits[i >> 6] >> (i & 63)) & 1U) != 0; }
        static void flip(std::vector<std::uint64_t>& bits, std::size_t i) { bits[i >> 6] ^= std::uint64_t{1} << (i & 63); }

        bool solve(std::vector<std::uint64_t>& unmatched, std::vector<EdgeId>& chosen)
        {
            std::size_t first = SIZE_MAX;
            for (std::size_t w = 0; w < unmatched.size(); ++w)
                if (unmatched[w] != 0) {
                    first = w * 64 + static_cast<std::size_t>(std::countr_zero(unmatched[w]));
                    break;
                }
            if (first == SIZE_MAX)
                return true;
            if (failed_.contains(unmatched))
                return false;
            for (auto [nb, eid] : adj_[first]) {
                if (!test(unmatched, nb))
                    continue;
                flip(unmatched, first);
                flip(unmatched, nb);
                chosen.push_back(eid);
                bool ok = solve(unmatched, chosen);
                flip(unmatched, first);
                flip(unmatched, nb);
                if (ok)
                    return true;
                chosen.pop_back();
            }
            failed_.insert(unmatched);
            return false;
        }

        std::vector<Vertex> members_;
        std::vector<std::size_t> local_;
        std::vector<std::vector<std::pair<std::size_t, EdgeId>>> adj_;
        std::unordered_set<std::vector<std::uint64_t>, WordsHash> failed_;
    };

} // namespace

std::optional<std::vector<EdgeId>> perfect_matching_on(const Multigraph& g, const VertexSet& s)
{
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set does not belong to this graph");
    return PairingSearch(g, s).run();
}

bool has_perfect_matching_on(const Multigraph& g, const VertexSet& s) { return perfect_matching_on(g, s).has_value(); }

bool is_paired_dominating(const Multigraph& g, const VertexSet& s)
{
    return is_dominating(g, s) && has_perfect_matching_on(g, s);
}

std::optional<std::string> dp_pair_violation(const Multigraph& g, const DpPair& pair)
{
    auto n = g.vertex_count();
    if (pair.d.universe() != n || pair.p.universe() != n)
        return "D or P is not a subset of this graph's vertex range";
    if (pair.d.intersects(pair.p))
        return "D and P intersect";
    if ((pair.d | pair.p).size() != n)
        return "D and P do not cover every vertex";
    if (!is_dominating(g, pair.d))
        return "D is not dominating";
    if (!is_dominating(g, pair.p))
        return "P is not dominating";
    VertexSet covered(n);
    for (auto id : pair.matching) {
        if (id >= g.edge_count())
            return "matching references unknown edge " + std::to_string(id);
        const auto& e = g.edge(id);
        if (e.is_loop())
            return "matching contains loop " + std::to_string(id);
        if (!pair.p.contains(e.u) || !pair.p.contains(e.v))
            return "matching edge " + std::to_string(id) + " leaves P";
        if (covered.contains(e.u) || covered.contains(e.v))
            return "matching edges share a vertex";
        covered.insert(e.u);
        covered.insert(e.v);
    }
    if (covered != pair.p)
        return "matching does not cover P";
    return std::nullopt;
}

bool is_dp_pair(const Multigraph& g, const DpPair& pair) { return !dp_pair_violation(g, pair).has_value(); }

namespace {

    enum class Side : std::int8_t { unassigned = -1, d = 0, p = 1 };

    // Depth-first assignment of vertices to D or P with unit propagation of the
    // local requirements: a D vertex needs a P neighbour; a P vertex needs a D
    // neighbour and a distinct P neighbour. Loops never help either side.
    class DpSearch {
    public:
        explicit DpSearch(const Multigraph& g) : g_(g), n_(g.vertex_count()), nbr_(n_)
        {
            for (Vertex v = 0; v < n_; ++v)
                for (auto w : g.neighbors(v))
                    if (w != v)
                        nbr_[v].push_back(w);
            std::vector<bool> seen(n_, false);
            for (Vertex s = 0; s < n_; ++s) {
                if (seen[s])
                    continue;
                std::deque<Vertex> queue{s};
                seen[s] = true;
                while (!queue.empty()) {
                    auto v = queue.front();
                    queue.pop_front();
                    order_.push_back(v);
                    for (auto w : nbr_[v])
                        if (!seen[w]) {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                }
            }
        }

        // Calls `found` on each DP-pair in search order until it returns false.
        void run(const std::function<bool(DpPair)>& found)
        {
            State s;
            s.side.assign(n_, Side::unassigned);
            s.cnt_d.assign(n_, 0);
            s.cnt_p.assign(n_, 0);
            s.cnt_u.resize(n_);
            for (Vertex v = 0; v < n_; ++v)
                s.cnt_u[v] = static_cast<int>(nbr_[v].size());
            std::vector<std::pair<Vertex, Side>> pending;
            for (Vertex v = 0; v < n_; ++v)
                if (!check(s, v, pending))
                    return;
            if (!drain(s, pending))
                return;
            stop_ = false;
            branch(std::move(s), 0, found);
        }

    private:
        struct State {
            std::vector<Side> side;
            std::vector<int> cnt_d;
            std::vector<int> cnt_p;
            std::vector<int> cnt_u;
        };

        Vertex unassigned_neighbor(const State& s, Vertex x) const
        {
            for (auto w : nbr_[x])
                if (s.side[w] == Side::unassigned)
                    return w;
            throw std::logic_error("no unassigned neighbour");
        }

        bool check(const State& s, Vertex x, std::vector<std::pair<Vertex, Side>>& pending) const
        {
            int d = s.cnt_d[x];
            int p = s.cnt_p[x];
            int u = s.cnt_u[x];
            switch (s.side[x]) {
            case Side::p:
                if (d + u == 0 || p + u == 0)
                    return false;
                if (d == 0 && p == 0)
                    return u >= 2;
                if (d == 0 && u == 1)
                    pending.emplace_back(unassigned_neighbor(s, x), Side::d);
                else if (p == 0 && u == 1)
                    pending.emplace_back(unassigned_neighbor(s, x), Side::p);
                return true;
            case Side::d:
                if (p + u == 0)
                    return false;
                if (p == 0 && u == 1)
                    pending.emplace_back(unassigned_neighbor(s, x), Side::p);
                return true;
            case Side::unassigned: {
                bool can_be_p = d + u >= 1 && p + u >= 1 && !(d == 0 && p == 0 && u < 2);
                bool can_be_d = p + u >= 1;
                if (!can_be_p && !can_be_d)
                    return false;
                if (!can_be_p)
                    pending.emplace_back(x, Side::d);
                else if (!can_be_d)
                    pending.emplace_back(x, Side::p);
                return true;
            }
            }
            return false;
        }

        bool assign(State& s, Vertex v, Side side, std::vector<std::pair<Vertex, Side>>& pending) const
        {
            if (s.side[v] != Side::unassigned)
                return s.side[v] == side;
            s.side[v] = side;
            for (auto w : nbr_[v]) {
                s.cnt_u[w] -= 1;
                (side == Side::d ? s.cnt_d[w] : s.cnt_p[w]) += 1;
            }
            if (!check(s, v, pending))
                return false;
            for (auto w : nbr_[v])
                if (!check(s, w, pending))
                    return false;
            return true;
        }

        bool drain(State& s, std::vector<std::pair<Vertex, Side>>& pending) const
        {
            while (!pending.empty()) {
                auto [v, side] = pending.back();
                pending.pop_back();
                if (!assign(s, v, side, pending))
                    return false;
            }
            return true;
        }

        void branch(State s, std::size_t pos, const std::function<bool(DpPair)>& found)
        {
            while (pos < order_.size() && s.side[order_[pos]] != Side::unassigned)
                ++pos;
            if (pos == order_.size()) {
                emit(s, found);
                return;
            }
            auto v = order_[pos];
            for (auto side : {Side::d, Side::p}) {
                State next = s;
                std::vector<std::pair<Vertex, Side>> pending;
                if (assign(next, v, side, pending) && drain(next, pending))
                    branch(std::move(next), pos + 1, found);
                if (stop_)
                    return;
            }
        }

        void emit(const State& s, const std::function<bool(DpPair)>& found)
        {
            DpPair pair{VertexSet(n_), VertexSet(n_), {}};
            for (Vertex v = 0; v < n_; ++v)
                (s.side[v] == Side::d ? pair.d : pair.p).insert(v);
            auto matching = perfect_matching_on(g_, pair.p);
            if (!matching)
                return;
            pair.matching = std::move(*matching);
            if (auto why = dp_pair_violation(g_, pair))
                throw std::logic_error("DP-pair search produced an invalid pair: " + *why);
            if (!found(std::move(pair)))
                stop_ = true;
        }

        const Multigraph& g_;
        std::size_t n_;
        std::vector<std::vector<Vertex>> nbr_;
        std::vector<Vertex> order_;
        bool stop_ = false;
    };

    void check_leaf_support_placement(const Multigraph& g, const DpPair& pair)
    {
        if (!leaves(g).is_subset_of(pair.d) || !supports(g).is_subset_of(pair.p))
            throw std::logic_error("DP-pair violates leaf/support placement");
    }

    std::optional<DpPair> first_pair(const Multigraph& g)
    {
        std::optional<DpPair> out;
        DpSearch(g).run([&](DpPair p) {
            out = std::move(p);
            return false;
        });
        return out;
    }

} // namespace

std::optional<DpPair> find_dp_pair(const Multigraph& g)
{
    auto n = g.vertex_count();
    auto components = connected_components(g);
    DpPair merged{VertexSet(n), VertexSet(n), {}};
    // Components are independent; solving them separately avoids re-searching
    // one component when another has no pair at all.
    for (const auto& comp : components) {
        std::vector<Vertex> old_of;
        auto sub = induced_subgraph(g, comp, &old_of);
        auto pair = first_pair(sub);
        if (!pair)
            return std::nullopt;
        for (auto v : pair->d.members())
            merged.d.insert(old_of[v]);
        for (auto v : pair->p.members())
            merged.p.insert(old_of[v]);
        for (auto e : pair->matching) {
            const auto& rec = sub.edge(e);
            auto a = old_of[rec.u];
            auto b = old_of[rec.v];
            EdgeId best = UINT32_MAX;
            for (auto id : g.incident_edges(a))
                if (g.edge(id).other(a) == b)
                    best = std::min(best, id);
            merged.matching.push_back(best);
        }
    }
    std::sort(merged.matching.begin(), merged.matching.end());
    if (auto why = dp_pair_violation(g, merged))
        throw std::logic_error("merged DP-pair is invalid: " + *why);
    check_leaf_support_placement(g, merged);
    return merged;
}

bool is_dpdp(const Multigraph& g) { return find_dp_pair(g).has_value(); }

std::vector<DpPair> enumerate_dp_pairs(const Multigraph& g, std::size_t cap)
{
    if (cap == 0)
        throw std::invalid_argument("enumeration cap must be at least 1");
    std::vector<DpPair> out;
    if (!is_dpdp(g))
        return out;
    DpSearch(g).run([&](DpPair p) {
        check_leaf_support_placement(g, p);
        out.push_back(std::move(p));
        return out.size() < cap;
    });
    return out;
}

} // namespace dpdp
