#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dpdp {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Subset of the vertex range 0..universe-1 of a host graph.
///
/// Stored as a packed bitset. Iteration via members() is ascending, so every
/// serialized set comes out sorted.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return universe_; }

    bool contains(Vertex v) const
    {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const;
    bool empty() const;

    std::vector<Vertex> members() const;

    VertexSet complement() const;
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    // Orders by universe, then by ascending member list.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

    std::span<const std::uint64_t> words() const { return words_; }

private:
    void check_same_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace dpdp
