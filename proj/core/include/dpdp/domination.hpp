#pragma once

#include <dpdp/graph.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dpdp {

/// A partition (D, P) of the vertex set with D dominating and P
/// paired-dominating. `matching` witnesses the perfect matching of G[P]; it is
/// not part of the pair's identity.
struct DpPair {
    VertexSet d;
    VertexSet p;
    std::vector<EdgeId> matching;
};

/// Two pairs are the same pair iff their partitions agree.
bool same_partition(const DpPair& a, const DpPair& b);

bool is_dominating(const Multigraph& g, const VertexSet& s);

/// Perfect matching of the subgraph induced by `s`, as ascending edge ids, or
/// std::nullopt when none exists. Loops never match.
std::optional<std::vector<EdgeId>> perfect_matching_on(const Multigraph& g, const VertexSet& s);
bool has_perfect_matching_on(const Multigraph& g, const VertexSet& s);

bool is_paired_dominating(const Multigraph& g, const VertexSet& s);

/// First violated clause of the DP-pair definition, checked literally against
/// g (partition, D dominating, P dominating, matching inside P and perfect),
/// or std::nullopt when the pair is valid.
std::optional<std::string> dp_pair_violation(const Multigraph& g, const DpPair& pair);
bool is_dp_pair(const Multigraph& g, const DpPair& pair);

std::optional<DpPair> find_dp_pair(const Multigraph& g);
bool is_dpdp(const Multigraph& g);

/// Distinct DP-pairs (by partition), at most `cap`, in a fixed search order.
/// Throws std::invalid_argument when cap is 0.
std::vector<DpPair> enumerate_dp_pairs(const Multigraph& g, std::size_t cap);

} // namespace dpdp
