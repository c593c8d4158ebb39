#include <dpdp/catalog.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dpdp {

Multigraph path_graph(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("path needs at least one vertex");
    std::vector<EdgeEndpoints> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Multigraph(n, edges);
}

Multigraph cycle_graph(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("cycle needs at least one vertex");
    std::vector<EdgeEndpoints> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Multigraph(n, edges);
}

Multigraph complete_graph(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("complete graph needs at least one vertex");
    std::vector<EdgeEndpoints> edges;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            edges.emplace_back(i, j);
    return Multigraph(n, edges);
}

Multigraph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete bipartite graph needs two nonempty sides");
    std::vector<EdgeEndpoints> edges;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            edges.emplace_back(i, static_cast<Vertex>(a + j));
    return Multigraph(a + b, edges);
}

Multigraph star_graph(std::size_t k)
{
    if (k < 1)
        throw std::invalid_argument("star needs at least one leaf");
    return complete_bipartite_graph(1, k);
}

Multigraph double_star_graph(std::size_t r, std::size_t s)
{
    if (r < 1 || s < 1)
        throw std::invalid_argument("double star needs r, s >= 1");
    std::vector<EdgeEndpoints> edges{{0, 1}};
    Vertex next = 2;
    for (std::size_t i = 0; i < r; ++i)
        edges.emplace_back(0, next++);
    for (std::size_t i = 0; i < s; ++i)
        edges.emplace_back(1, next++);
    return Multigraph(next, edges);
}

Multigraph corona_graph(const Multigraph& base, const std::vector<std::size_t>& pendants)
{
    auto n = base.vertex_count();
    if (!pendants.empty() && pendants.size() != n)
        throw std::invalid_argument("corona needs one pendant count per vertex");
    auto edges = base.endpoint_list();
    auto next = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v) {
        auto k = pendants.empty() ? 1 : pendants[v];
        if (k < 1)
            throw std::invalid_argument("corona pendant counts must be at least 1");
        for (std::size_t i = 0; i < k; ++i)
            edges.emplace_back(v, next++);
    }
    return Multigraph(next, edges);
}

Multigraph make(const GraphFamily& family)
{
    struct Visitor {
        Multigraph operator()(const PathFamily& f) const { return path_graph(f.n); }
        Multigraph operator()(const CycleFamily& f) const { return cycle_graph(f.n); }
        Multigraph operator()(const CompleteFamily& f) const { return complete_graph(f.n); }
        Multigraph operator()(const CompleteBipartiteFamily& f) const { return complete_bipartite_graph(f.a, f.b); }
        Multigraph operator()(const StarFamily& f) const { return star_graph(f.k); }
        Multigraph operator()(const DoubleStarFamily& f) const { return double_star_graph(f.r, f.s); }
        Multigraph operator()(const CoronaFamily& f) const { return corona_graph(f.base, f.pendants); }
    };
    return std::visit(Visitor{}, family);
}

namespace {

    // Index of the unordered pair {i, j}, i < j, in graph6 column order.
    std::size_t pair_index(Vertex i, Vertex j)
    {
        if (i > j)
            std::swap(i, j);
        return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
    }

    // Index of {i, j} with i <= j among pairs allowing loops.
    std::size_t multi_pair_index(Vertex i, Vertex j)
    {
        if (i > j)
            std::swap(i, j);
        return static_cast<std::size_t>(j) * (j + 1) / 2 + i;
    }

    struct Canonical {
        std::vector<std::size_t> code;
        std::vector<Vertex> perm; // perm[old] = new
    };

    // Lexicographically least sorted pair-index list over all relabellings.
    Canonical canonical_form(const Multigraph& g, bool allow_loops)
    {
        auto n = g.vertex_count();
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        Canonical best;
        bool first = true;
        std::vector<std::size_t> code(g.edge_count());
        do {
            for (std::size_t i = 0; i < g.edge_count(); ++i) {
                const auto& e = g.edge(static_cast<EdgeId>(i));
                code[i] = allow_loops ? multi_pair_index(perm[e.u], perm[e.v]) : pair_index(perm[e.u], perm[e.v]);
            }
            std::sort(code.begin(), code.end());
            if (first || code < best.code) {
                best.code = code;
                best.perm = perm;
                first = false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    Multigraph relabel(const Multigraph& g, const std::vector<Vertex>& perm)
    {
        std::vector<EdgeEndpoints> edges;
        for (const auto& e : g.edges()) {
            auto a = perm[e.u], b = perm[e.v];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end(), [](const EdgeEndpoints& x, const EdgeEndpoints& y) {
            return std::pair(x.second, x.first) < std::pair(y.second, y.first);
        });
        return Multigraph(g.vertex_count(), edges);
    }

} // namespace

std::vector<Multigraph> enumerate_connected_simple(std::size_t n)
{
    if (n < 1 || n > 7)
        throw std::invalid_argument("enumerate_connected_simple supports 1 <= n <= 7");
    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending each class on n-1 vertices by one vertex reaches them all.
    std::map<std::vector<std::size_t>, Multigraph> classes;
    classes.emplace(std::vector<std::size_t>{}, Multigraph(1, {}));
    for (std::size_t order = 2; order <= n; ++order) {
        std::map<std::vector<std::size_t>, Multigraph> next;
        auto fresh = static_cast<Vertex>(order - 1);
        for (const auto& [code, g] : classes) {
            for (std::uint32_t mask = 1; mask < (1U << (order - 1)); ++mask) {
                auto edges = g.endpoint_list();
                for (Vertex v = 0; v < fresh; ++v)
                    if ((mask >> v) & 1U)
                        edges.emplace_back(v, fresh);
                Multigraph candidate(order, edges);
                auto canon = canonical_form(candidate, false);
                if (!next.contains(canon.code))
                    next.emplace(canon.code, relabel(candidate, canon.perm));
            }
        }
        classes = std::move(next);
    }
    std::vector<Multigraph> out;
    for (auto& [code, g] : classes)
        out.push_back(g);
    return out;
}

std::vector<Multigraph> enumerate_connected_multigraphs(std::size_t max_edges)
{
    if (max_edges > 5)
        throw std::invalid_argument("enumerate_connected_multigraphs supports at most 5 edges");
    std::vector<Multigraph> out;
    for (std::size_t m = 1; m <= max_edges; ++m) {
        for (std::size_t n = 1; n <= m + 1; ++n) {
            std::vector<EdgeEndpoints> types;
            for (Vertex j = 0; j < n; ++j)
                for (Vertex i = 0; i <= j; ++i)
                    types.emplace_back(i, j);
            std::map<std::vector<std::size_t>, Multigraph> classes;
            // Non-decreasing index sequences enumerate multisets of edge types.
            std::vector<std::size_t> pick(m, 0);
            while (true) {
                std::vector<EdgeEndpoints> edges;
                for (auto t : pick)
                    edges.push_back(types[t]);
                Multigraph candidate(n, edges);
                if (!has_isolated_vertex(candidate) && is_connected(candidate)) {
                    auto canon = canonical_form(candidate, true);
                    if (!classes.contains(canon.code))
                        classes.emplace(canon.code, relabel(candidate, canon.perm));
                }
                std::size_t i = m;
                while (i > 0 && pick[i - 1] == types.size() - 1)
                    --i;
                if (i == 0)
                    break;
                ++pick[i - 1];
                for (std::size_t j = i; j < m; ++j)
                    pick[j] = pick[i - 1];
            }
            for (auto& [code, g] : classes)
                out.push_back(g);
        }
    }
    return out;
}

namespace {

    std::string rooted_code(const Multigraph& t, Vertex v, Vertex parent)
    {
        std::vector<std::string> parts;
        for (auto w : t.neighbors(v))
            if (w != parent)
                parts.push_back(rooted_code(t, w, v));
        std::sort(parts.begin(), parts.end());
        std::string out = "(";
        for (auto& p : parts)
            out += p;
        return out + ")";
    }

    // Canonical string of an unlabelled tree: least rooted code over centres.
    std::string tree_code(const Multigraph& t)
    {
        auto n = t.vertex_count();
        std::vector<std::size_t> deg(n);
        std::vector<Vertex> layer;
        for (Vertex v = 0; v < n; ++v) {
            deg[v] = t.degree(v);
            if (deg[v] <= 1)
                layer.push_back(v);
        }
        std::size_t remaining = n;
        while (remaining > 2) {
            remaining -= layer.size();
            std::vector<Vertex> next;
            for (auto v : layer)
                for (auto w : t.neighbors(v))
                    if (--deg[w] == 1)
                        next.push_back(w);
            layer = std::move(next);
        }
        constexpr Vertex none = UINT32_MAX;
        std::string best;
        for (auto c : layer) {
            auto code = rooted_code(t, c, none);
            if (best.empty() || code < best)
                best = code;
        }
        return best;
    }

} // namespace

std::vector<Multigraph> enumerate_trees(std::size_t n)
{
    if (n < 1)
        throw std::invalid_argument("a tree needs at least one vertex");
    std::map<std::string, Multigraph> classes;
    classes.emplace(tree_code(Multigraph(1, {})), Multigraph(1, {}));
    for (std::size_t order = 2; order <= n; ++order) {
        std::map<std::string, Multigraph> next;
        for (const auto& [code, t] : classes) {
            for (Vertex v = 0; v + 1 < order; ++v) {
                auto edges = t.endpoint_list();
                edges.emplace_back(v, static_cast<Vertex>(order - 1));
                Multigraph candidate(order, edges);
                next.try_emplace(tree_code(candidate), candidate);
            }
        }
        classes = std::move(next);
    }
    std::vector<Multigraph> out;
    for (auto& [code, t] : classes)
        out.push_back(t);
    return out;
}

Multigraph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& sequence)
{
    if (n < 1)
        throw std::invalid_argument("a tree needs at least one vertex");
    if (n == 1)
        return Multigraph(1, {});
    if (sequence.size() + 2 != n)
        throw std::invalid_argument("Pruefer sequence must have n - 2 entries");
    std::vector<std::size_t> degree(n, 1);
    for (auto v : sequence) {
        if (v >= n)
            throw std::invalid_argument("Pruefer entry out of range");
        ++degree[v];
    }
    std::set<Vertex> leaves_left;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves_left.insert(v);
    std::vector<EdgeEndpoints> edges;
    for (auto v : sequence) {
        auto leaf = *leaves_left.begin();
        leaves_left.erase(leaves_left.begin());
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1)
            leaves_left.insert(v);
    }
    auto a = *leaves_left.begin();
    auto b = *std::next(leaves_left.begin());
    edges.emplace_back(a, b);
    return Multigraph(n, edges);
}

std::string write_graph6(const Multigraph& g)
{
    auto n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("graph6 writer supports at most 62 vertices");
    if (!g.is_simple())
        throw std::invalid_argument("graph6 cannot encode loops or parallel edges");
    std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    std::vector<bool> adjacency(bits, false);
    for (const auto& e : g.edges())
        adjacency[pair_index(e.u, e.v)] = true;
    std::string out(1, static_cast<char>(n + 63));
    for (std::size_t i = 0; i < bits; i += 6) {
        int group = 0;
        for (std::size_t k = 0; k < 6; ++k)
            group = (group << 1) | (i + k < bits && adjacency[i + k] ? 1 : 0);
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

Multigraph read_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw std::invalid_argument("graph6: empty input");
    for (char c : line)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: character outside 63..126");
    auto n = static_cast<std::size_t>(line[0] - 63);
    if (n > 62)
        throw std::invalid_argument("graph6: only orders up to 62 are supported");
    std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    std::size_t groups = (bits + 5) / 6;
    if (line.size() != 1 + groups)
        throw std::invalid_argument("graph6: expected " + std::to_string(groups) + " data bytes for order " + std::to_string(n));
    std::vector<EdgeEndpoints> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int group = line[1 + k / 6] - 63;
            if ((group >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    }
    for (; k < groups * 6; ++k) {
        int group = line[1 + k / 6] - 63;
        if ((group >> (5 - k % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return Multigraph(n, edges);
}

std::vector<Multigraph> read_graph6_file(std::string_view text)
{
    std::vector<Multigraph> out;
    std::istringstream in{std::string(text)};
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (first && line.starts_with(">>graph6<<"))
            line.erase(0, 10);
        first = false;
        if (line.empty())
            continue;
        out.push_back(read_graph6(line));
    }
    return out;
}

std::string write_edge_list(const Multigraph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Multigraph read_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        rows.push_back(line.substr(start));
    }
    if (rows.empty())
        throw std::invalid_argument("edge list: missing 'n m' header");
    auto parse_pair = [](const std::string& row, const char* what) {
        std::istringstream fields(row);
        long long a = -1, b = -1;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0)
            throw std::invalid_argument(std::string("edge list: malformed ") + what + " line '" + row + "'");
        return std::pair<std::size_t, std::size_t>(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    };
    auto [n, m] = parse_pair(rows[0], "header");
    if (rows.size() != m + 1)
        throw std::invalid_argument("edge list: header announces " + std::to_string(m) + " edges, found "
            + std::to_string(rows.size() - 1));
    std::vector<EdgeEndpoints> edges;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto [u, v] = parse_pair(rows[i], "edge");
        if (u >= n || v >= n)
            throw std::invalid_argument("edge list: endpoint out of range in '" + rows[i] + "'");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Multigraph(n, edges);
}

} // namespace dpdp
