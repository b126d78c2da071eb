#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace autonet {

/// Subset of the node set {1..n}. Node i occupies bit i-1 of the mask.
///
/// operator<=> compares masks numerically, which is colexicographic order on
/// node sets; every deterministic tie-break in the library (witness selection,
/// subset sweeps) uses this order.
class NodeSet {
public:
    constexpr NodeSet() = default;

    static constexpr NodeSet from_mask(std::uint32_t mask) {
        NodeSet s;
        s.bits_ = mask;
        return s;
    }

    static NodeSet of(std::initializer_list<int> nodes) {
        NodeSet s;
        for (int i : nodes) s.insert(i);
        return s;
    }

    static constexpr NodeSet singleton(int i) { return from_mask(1u << (i - 1)); }

    static constexpr NodeSet full(int n) {
        return from_mask(n <= 0 ? 0u : (0xffffffffu >> (32 - n)));
    }

    constexpr std::uint32_t mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return i >= 1 && i <= 32 && ((bits_ >> (i - 1)) & 1u); }
    constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }

    void insert(int i) {
        if (i < 1 || i > 32) throw std::invalid_argument("node index out of range");
        bits_ |= 1u << (i - 1);
    }

    /// Smallest node, 0 if empty.
    constexpr int min_node() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    template <typename F>
    void for_each_node(F&& fn) const {
        std::uint32_t m = bits_;
        while (m) {
            fn(std::countr_zero(m) + 1);
            m &= m - 1;
        }
    }

    std::vector<int> nodes() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each_node([&](int i) { out.push_back(i); });
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each_node([&](int i) {
            if (!first) out += ',';
            out += std::to_string(i);
            first = false;
        });
        out += '}';
        return out;
    }

    friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return from_mask(a.bits_ | b.bits_); }
    friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return from_mask(a.bits_ & b.bits_); }
    friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return from_mask(a.bits_ & ~b.bits_); }

    constexpr auto operator<=>(const NodeSet&) const = default;

private:
    std::uint32_t bits_ = 0;
};

}  // namespace autonet
