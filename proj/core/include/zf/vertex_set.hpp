#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace zf {

/// Subset of a ground set {1,...,n}. Vertex v occupies bit v-1 of a 64-bit
/// word, so ground sets are capped at 64 vertices. Vertices are 1-based
/// everywhere in the public interface.
class VertexSet {
public:
    static constexpr int kMaxGroundSet = 64;

    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.bits_ |= bit(v);
        return s;
    }

    static VertexSet from_members(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.bits_ |= bit(v);
        return s;
    }

    /// The full ground set {1,...,n}.
    static constexpr VertexSet full(int n) {
        return from_bits(n >= 64 ? ~0ULL : (1ULL << n) - 1);
    }

    static constexpr VertexSet single(int v) { return from_bits(bit(v)); }

    constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(VertexSet o) const {
        return bits_ != o.bits_ && subset_of(o);
    }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    constexpr VertexSet complement(int n) const { return full(n) - *this; }
    constexpr VertexSet with(int v) const { return from_bits(bits_ | bit(v)); }
    constexpr VertexSet without(int v) const { return from_bits(bits_ & ~bit(v)); }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Smallest member, or 0 when empty.
    constexpr int min_member() const {
        return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    /// "{1,2,3}", or "{}" for the empty set.
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            if (!first) out += ',';
            out += std::to_string(std::countr_zero(b) + 1);
            first = false;
        }
        out += '}';
        return out;
    }

    constexpr std::uint64_t bits() const { return bits_; }

private:
    static constexpr std::uint64_t bit(int v) { return 1ULL << (v - 1); }

    std::uint64_t bits_ = 0;
};

/// Canonical order on edges and clutter members: by size first, then
/// lexicographically by the sorted member sequence. Note this differs from
/// the numeric order of the underlying bit words: {1,4} precedes {2,3}
/// canonically but its word is larger.
inline bool edge_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint64_t x = a.bits(), y = b.bits();
    while (x != 0 && y != 0) {
        int vx = std::countr_zero(x), vy = std::countr_zero(y);
        if (vx != vy) return vx < vy;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

/// Strict total order for use as a container key; not the canonical order.
inline bool bits_less(VertexSet a, VertexSet b) { return a.bits() < b.bits(); }

} // namespace zf
