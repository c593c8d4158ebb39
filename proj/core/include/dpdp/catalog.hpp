#pragma once

#include <dpdp/graph.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dpdp {

struct PathFamily {
    std::size_t n = 1;
};
/// cycle(1) is a single loop, cycle(2) two parallel edges.
struct CycleFamily {
    std::size_t n = 3;
};
struct CompleteFamily {
    std::size_t n = 1;
};
struct CompleteBipartiteFamily {
    std::size_t a = 1;
    std::size_t b = 1;
};
/// K_{1,k}
struct StarFamily {
    std::size_t k = 1;
};
struct DoubleStarFamily {
    std::size_t r = 1;
    std::size_t s = 1;
};
/// F with `pendants[v]` pendant edges at each vertex v; an empty list means
/// one pendant per vertex.
struct CoronaFamily {
    Multigraph base;
    std::vector<std::size_t> pendants;
};

using GraphFamily
    = std::variant<PathFamily, CycleFamily, CompleteFamily, CompleteBipartiteFamily, StarFamily, DoubleStarFamily, CoronaFamily>;

/// Throws std::invalid_argument for out-of-range parameters.
Multigraph make(const GraphFamily& family);

Multigraph path_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);
Multigraph complete_graph(std::size_t n);
Multigraph complete_bipartite_graph(std::size_t a, std::size_t b);
Multigraph star_graph(std::size_t k);
Multigraph double_star_graph(std::size_t r, std::size_t s);
Multigraph corona_graph(const Multigraph& base, const std::vector<std::size_t>& pendants = {});

/// Connected simple graphs on n vertices, one per isomorphism class, sorted by
/// canonical code. 1 <= n <= 7.
std::vector<Multigraph> enumerate_connected_simple(std::size_t n);

/// Connected multigraphs (loops and parallel edges allowed) with between 1 and
/// max_edges edges and no isolated vertex, one per isomorphism class.
/// max_edges <= 5.
std::vector<Multigraph> enumerate_connected_multigraphs(std::size_t max_edges);

/// Trees on n vertices, one per isomorphism class.
std::vector<Multigraph> enumerate_trees(std::size_t n);

/// Uniform random labelled tree on n vertices from a Pruefer sequence.
template <typename Rng>
Multigraph random_tree(std::size_t n, Rng& rng);
Multigraph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& sequence);

std::string write_graph6(const Multigraph& g);
Multigraph read_graph6(std::string_view line);
/// One graph per non-empty line; a leading ">>graph6<<" header is skipped.
std::vector<Multigraph> read_graph6_file(std::string_view text);

std::string write_edge_list(const Multigraph& g);
Multigraph read_edge_list(std::string_view text);

} // namespace dpdp

#include <random>

template <typename Rng>
dpdp::Multigraph dpdp::random_tree(std::size_t n, Rng& rng)
{
    std::vector<Vertex> seq;
    if (n >= 3) {
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        for (std::size_t i = 0; i + 2 < n; ++i)
            seq.push_back(pick(rng));
    }
    return tree_from_pruefer(n, seq);
}
