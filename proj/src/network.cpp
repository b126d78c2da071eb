#include "autonet/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace autonet {

std::uint64_t Network::state_count_for(int q, int n) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (n < 1 || n > kMaxNodes) throw std::invalid_argument("node count must be between 1 and 24");
    std::uint64_t size = 1;
    for (int k = 0; k < n; ++k) {
        size *= static_cast<std::uint64_t>(q);
        if (size > kMaxStates)
            throw SizeGuardError("state space q^n exceeds the 2^24 entry cap");
    }
    return size;
}

Network::Network(int q, int n, std::vector<state_t> table) : q_(q), n_(n), table_(std::move(table)) {
    const std::uint64_t size = state_count_for(q, n);
    if (table_.size() != size)
        throw std::invalid_argument("table has " + std::to_string(table_.size()) + " entries, expected " +
                                    std::to_string(size));
    pow_[0] = 1;
    for (int k = 1; k <= n_; ++k) pow_[static_cast<std::size_t>(k)] = pow_[static_cast<std::size_t>(k - 1)] * static_cast<std::uint32_t>(q_);
    for (state_t v : table_)
        if (v >= size) throw std::invalid_argument("table entry out of range");
}

Network Network::identity(int q, int n) {
    return build(q, n, [](state_t x) { return x; });
}

Network Network::from_images(int q, int n, const std::vector<Configuration>& images) {
    const std::uint64_t size = state_count_for(q, n);
    if (images.size() != size)
        throw std::invalid_argument("image list has " + std::to_string(images.size()) + " entries, expected " +
                                    std::to_string(size));
    Network id = identity(q, n);
    std::vector<state_t> table(size);
    for (std::uint64_t x = 0; x < size; ++x) table[x] = static_cast<state_t>(id.encode(images[x]));
    return Network(q, n, std::move(table));
}

state_t Network::digit_mask(NodeSet s) const {
    state_t out = 0;
    s.for_each_node([&](int i) { out |= state_t{1} << (n_ - i); });
    return out;
}

std::uint64_t Network::encode(const Configuration& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("configuration has " + std::to_string(x.size()) + " symbols, expected " +
                                    std::to_string(n_));
    std::uint64_t idx = 0;
    for (int i = 1; i <= n_; ++i) {
        const Symbol v = x[static_cast<std::size_t>(i - 1)];
        if (v >= q_) throw std::invalid_argument("symbol out of range for alphabet");
        idx += static_cast<std::uint64_t>(v) * pow_of(i);
    }
    return idx;
}

Configuration Network::decode(state_t x) const {
    Configuration out(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) out[static_cast<std::size_t>(i - 1)] = static_cast<Symbol>(digit(x, i));
    return out;
}

std::string Network::format_state(state_t x) const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 1; i <= n_; ++i) out[static_cast<std::size_t>(i - 1)] = static_cast<char>('0' + digit(x, i));
    return out;
}

state_t Network::parse_state(std::string_view digits) const {
    if (static_cast<int>(digits.size()) != n_)
        throw std::invalid_argument("configuration string must have exactly " + std::to_string(n_) + " digits");
    std::uint64_t idx = 0;
    for (int i = 1; i <= n_; ++i) {
        const char c = digits[static_cast<std::size_t>(i - 1)];
        if (c < '0' || c >= '0' + q_)
            throw std::invalid_argument(std::string("invalid digit '") + c + "' for alphabet size " +
                                        std::to_string(q_));
        idx += static_cast<std::uint64_t>(c - '0') * pow_of(i);
    }
    return static_cast<state_t>(idx);
}

state_t Network::update_index(state_t x, NodeSet s) const {
    if (!s.subset_of(NodeSet::full(n_))) throw std::invalid_argument("node set out of range");
    const state_t y = table_[x];
    if (q_ == 2) {
        const state_t dm = digit_mask(s);
        return (y & dm) | (x & static_cast<state_t>(~dm));
    }
    s.for_each_node([&](int i) { x = with_digit(x, i, digit(y, i)); });
    return x;
}

state_t Network::update_word_index(state_t x, std::span<const NodeSet> word) const {
    for (const NodeSet& s : word) x = update_index(x, s);
    return x;
}

void validate_schedule(const Schedule& y, int n) {
    NodeSet seen;
    for (const NodeSet& b : y.blocks) {
        if (!b.subset_of(NodeSet::full(n))) throw std::invalid_argument("schedule block out of range");
        if (b.intersects(seen)) throw std::invalid_argument("schedule blocks overlap");
        seen = seen | b;
    }
    if (seen != NodeSet::full(n)) throw std::invalid_argument("schedule blocks do not cover {1..n}");
}

Configuration apply(const Network& f, const Configuration& x) {
    return f.decode(f.apply_index(static_cast<state_t>(f.encode(x))));
}

Configuration update(const Network& f, NodeSet s, const Configuration& x) {
    return f.decode(f.update_index(static_cast<state_t>(f.encode(x)), s));
}

Configuration update_word(const Network& f, const Word& w, const Configuration& x) {
    return f.decode(f.update_word_index(static_cast<state_t>(f.encode(x)), w));
}

Network schedule_network(const Network& f, const Schedule& y) {
    validate_schedule(y, f.n());
    // Blocks are disjoint, so coordinates written by block y_t are never
    // rewritten by later blocks; the plain fold realizes g_{y_t} = f^{Y_t}_{y_t}.
    return Network::build(f.q(), f.n(), [&](state_t x) {
        for (const NodeSet& b : y.blocks) x = f.update_index(x, b);
        return x;
    });
}

NodeSet delta(const Configuration& x, const Configuration& y) {
    if (x.size() != y.size()) throw std::invalid_argument("configurations have different lengths");
    NodeSet d;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) d.insert(static_cast<int>(i) + 1);
    return d;
}

NodeSet delta_index(const Network& f, state_t x, state_t y) {
    std::uint32_t bits = 0;
    for (int i = 1; i <= f.n(); ++i)
        if (f.digit(x, i) != f.digit(y, i)) bits |= 1u << (i - 1);
    return NodeSet::from_mask(bits);
}

Network compose(const Network& f, const Network& g) {
    if (f.q() != g.q() || f.n() != g.n()) throw std::invalid_argument("network dimensions differ");
    return Network::build(f.q(), f.n(), [&](state_t x) { return f.apply_index(g.apply_index(x)); });
}

Network power(const Network& f, std::uint64_t m) {
    Network result = Network::identity(f.q(), f.n());
    Network base = f;
    while (m) {
        if (m & 1) result = compose(base, result);
        m >>= 1;
        if (m) base = compose(base, base);
    }
    return result;
}

}  // namespace autonet
