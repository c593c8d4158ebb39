#include <dpdp/vertex_set.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dpdp {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
{
    for (auto v : members)
        insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe)
{
    for (auto v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v)
        s.insert(static_cast<Vertex>(v));
    return s;
}

void VertexSet::insert(Vertex v)
{
    if (v >= universe_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v)
{
    if (v < universe_)
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const
{
    std::size_t count = 0;
    for (auto w : words_)
        count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w != 0) {
            auto bit = std::countr_zero(w);
            out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(bit)));
            w &= w - 1;
        }
    }
    return out;
}

VertexSet VertexSet::complement() const
{
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = ~words_[i];
    if (auto tail = universe_ & 63; tail != 0 && !out.words_.empty())
        out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const
{
    if (universe_ != other.universe_)
        throw std::invalid_argument("vertex sets over different universes");
}

VertexSet& VertexSet::operator|=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other)
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0)
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0)
            return false;
    return true;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b)
{
    if (auto c = a.universe_ <=> b.universe_; c != 0)
        return c;
    auto am = a.members();
    auto bm = b.members();
    return std::lexicographical_compare_three_way(am.begin(), am.end(), bm.begin(), bm.end());
}

} // namespace dpdp
