#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autonet/network.hpp"

namespace autonet {

/// Subcube X[s, alpha] of {0,1}^n: the configurations fixing the nodes of s
/// to the values alpha. Stored as masks in encoded-state bit positions
/// (node i <-> bit n-i), so membership is two bit operations. Never empty.
class Subcube {
public:
    Subcube(int n, NodeSet support, std::initializer_list<std::pair<int, int>> values);

    /// Construct from encoded-position masks: `fixed` marks the fixed
    /// positions, `values` their values (subset of fixed).
    static Subcube from_masks(int n, state_t fixed, state_t values);
    static Subcube full_cube(int n) { return from_masks(n, 0, 0); }
    static Subcube point(int n, state_t x);
    static Subcube from_values(int n, std::initializer_list<std::pair<int, int>> node_values);

    int n() const { return n_; }
    state_t fixed_mask() const { return fixed_; }
    state_t values_mask() const { return values_; }

    NodeSet support() const;
    /// Fixed value of `node`; the node must belong to the support.
    int value_at(int node) const;

    bool member(state_t x) const { return (x & fixed_) == values_; }
    std::uint64_t size() const { return std::uint64_t{1} << (n_ - std::popcount(fixed_)); }
    int dimension() const { return n_ - std::popcount(fixed_); }

    /// Set containment: every point of `other` lies in *this.
    bool contains(const Subcube& other) const {
        return (fixed_ & ~other.fixed_) == 0 && ((values_ ^ other.values_) & fixed_) == 0;
    }

    /// Points in ascending index order.
    std::vector<state_t> points() const;

    /// Pattern form, node 1 first: fixed digits, '*' for free ("1*0").
    std::string to_string() const;

    bool operator==(const Subcube&) const = default;

private:
    Subcube(int n, state_t fixed, state_t values) : n_(n), fixed_(fixed), values_(values) {}
    int n_;
    state_t fixed_;
    state_t values_;
};

/// Empty iff the two cubes fix a common node to different values.
std::optional<Subcube> intersect(const Subcube& a, const Subcube& b);

/// Smallest subcube containing both x and y: support = complement of
/// delta(x, y), values from x.
Subcube interval(int n, state_t x, state_t y);

}  // namespace autonet
