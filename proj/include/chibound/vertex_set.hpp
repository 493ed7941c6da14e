#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace chibound {

using Vertex = int;

/// Largest vertex count supported by the single-word bitset kernel.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices in [0, 64), stored as one machine word.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs) bits_ |= bit(v);
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    /// {v+1, ..., 63}
    static constexpr VertexSet above(Vertex v)
    {
        return VertexSet(v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    /// Smallest member; -1 when empty.
    constexpr Vertex first() const { return bits_ ? std::countr_zero(bits_) : -1; }

    constexpr void insert(Vertex v) { bits_ |= bit(v); }
    constexpr void erase(Vertex v) { bits_ &= ~bit(v); }

    constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~bit(v)); }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    /// Lexicographic comparison of the ascending member sequences.
    friend constexpr bool lex_less(VertexSet a, VertexSet b)
    {
        while (a.bits_ && b.bits_) {
            Vertex x = a.first(), y = b.first();
            if (x != y) return x < y;
            a.erase(x);
            b.erase(y);
        }
        return a.bits_ == 0 && b.bits_ != 0;
    }

private:
    static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }
    std::uint64_t bits_ = 0;
};

}  // namespace chibound
