#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autonet/guard.hpp"
#include "autonet/nodeset.hpp"

namespace autonet {

using Symbol = std::uint8_t;

/// State of an n-node network over a q-letter alphabet; symbols[i] is the
/// state of node i+1 (nodes are 1-based throughout).
using Configuration = std::vector<Symbol>;

/// Canonical index of a configuration: sum x_i * q^(n-i), node 1 most
/// significant. Fixed across the file format and all table orders.
using state_t = std::uint32_t;

/// Finite automata network f : Q^n -> Q^n as a dense lookup table in
/// canonical index order. Immutable after construction; all operations
/// are pure, so networks can be shared freely across threads.
class Network {
public:
    static constexpr int kMaxNodes = 24;
    static constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 24;

    Network(int q, int n, std::vector<state_t> table);

    static Network identity(int q, int n);
    static Network from_images(int q, int n, const std::vector<Configuration>& images);

    template <typename F>
    static Network build(int q, int n, F&& image) {
        std::vector<state_t> t(state_count_for(q, n));
        for (std::uint64_t x = 0; x < t.size(); ++x)
            t[x] = static_cast<state_t>(image(static_cast<state_t>(x)));
        return Network(q, n, std::move(t));
    }

    int q() const { return q_; }
    int n() const { return n_; }
    std::uint64_t state_count() const { return table_.size(); }
    const std::vector<state_t>& table() const { return table_; }

    /// q^(n-i), the positional weight of node i.
    std::uint32_t pow_of(int i) const { return pow_[static_cast<std::size_t>(n_ - i)]; }
    int digit(state_t x, int i) const { return static_cast<int>((x / pow_of(i)) % static_cast<std::uint32_t>(q_)); }
    state_t with_digit(state_t x, int i, int v) const {
        return static_cast<state_t>(static_cast<std::int64_t>(x) +
                                    static_cast<std::int64_t>(v - digit(x, i)) * pow_of(i));
    }

    /// For q == 2: mask with bit n-i set for every node i of s, i.e. the
    /// positions the nodes of s occupy inside an encoded state.
    state_t digit_mask(NodeSet s) const;

    std::uint64_t encode(const Configuration& x) const;
    Configuration decode(state_t x) const;
    std::string format_state(state_t x) const;
    state_t parse_state(std::string_view digits) const;

    state_t apply_index(state_t x) const { return table_[x]; }
    state_t update_index(state_t x, NodeSet s) const;
    state_t update_word_index(state_t x, std::span<const NodeSet> word) const;

    bool operator==(const Network&) const = default;

    /// q^n after validating the (q, n, cap) preconditions.
    static std::uint64_t state_count_for(int q, int n);

private:
    int q_ = 0;
    int n_ = 0;
    std::array<std::uint32_t, kMaxNodes + 1> pow_{};  // pow_[k] = q^k
    std::vector<state_t> table_;
};

/// Ordered partition of {1..n}: blocks pairwise disjoint, union = {1..n};
/// empty blocks are permitted.
struct Schedule {
    std::vector<NodeSet> blocks;
};

/// Arbitrary finite sequence of node sets (no disjointness requirement).
using Word = std::vector<NodeSet>;

void validate_schedule(const Schedule& y, int n);

Configuration apply(const Network& f, const Configuration& x);
Configuration update(const Network& f, NodeSet s, const Configuration& x);
Configuration update_word(const Network& f, const Word& w, const Configuration& x);

/// The network g with g_{y_t} = f^{Y_t}_{y_t} for every block y_t of the
/// ordered partition Y.
Network schedule_network(const Network& f, const Schedule& y);

/// Disagreement set {i : x_i != y_i}.
NodeSet delta(const Configuration& x, const Configuration& y);
NodeSet delta_index(const Network& f, state_t x, state_t y);

/// compose(f, g)(x) = f(g(x)).
Network compose(const Network& f, const Network& g);
Network power(const Network& f, std::uint64_t m);

}  // namespace autonet
