#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace biclab {

using Vertex = int;

/// Maximum number of vertices a Graph can hold; one machine word per row.
inline constexpr int kMaxOrder = 64;

/// A subset of the vertices 0..63 of some host graph, stored as a bitmask.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> members) {
        for (Vertex v : members) insert(v);
    }

    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    /// Smallest member; undefined on the empty set.
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Lexicographic order on the sorted member lists ({0,1} < {0,2,3} < {1}).
    friend bool lex_less(VertexSet a, VertexSet b) {
        std::uint64_t x = a.bits_;
        std::uint64_t y = b.bits_;
        while (x != 0 && y != 0) {
            int i = std::countr_zero(x);
            int j = std::countr_zero(y);
            if (i != j) return i < j;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace biclab
