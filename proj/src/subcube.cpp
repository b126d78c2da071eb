#include "autonet/subcube.hpp"

#include <bit>
#include <stdexcept>

namespace autonet {

namespace {

void check_n(int n) {
    if (n < 1 || n > Network::kMaxNodes) throw std::invalid_argument("node count must be between 1 and 24");
}

state_t node_bit(int n, int node) {
    if (node < 1 || node > n) throw std::invalid_argument("node index out of range");
    return state_t{1} << (n - node);
}

}  // namespace

Subcube Subcube::from_masks(int n, state_t fixed, state_t values) {
    check_n(n);
    const state_t space = static_cast<state_t>((std::uint64_t{1} << n) - 1);
    if ((fixed & ~space) != 0) throw std::invalid_argument("fixed mask out of range");
    if ((values & ~fixed) != 0) throw std::invalid_argument("values must be a subset of the fixed positions");
    return Subcube(n, fixed, values);
}

Subcube Subcube::point(int n, state_t x) {
    const state_t space = static_cast<state_t>((std::uint64_t{1} << n) - 1);
    return from_masks(n, space, x);
}

Subcube Subcube::from_values(int n, std::initializer_list<std::pair<int, int>> node_values) {
    check_n(n);
    state_t fixed = 0, values = 0;
    for (const auto& [node, v] : node_values) {
        const state_t bit = node_bit(n, node);
        if (v != 0 && v != 1) throw std::invalid_argument("subcube values must be 0 or 1");
        if (fixed & bit) throw std::invalid_argument("duplicate node in subcube assignment");
        fixed |= bit;
        if (v) values |= bit;
    }
    return Subcube(n, fixed, values);
}

Subcube::Subcube(int n, NodeSet support, std::initializer_list<std::pair<int, int>> values)
    : Subcube(from_values(n, values)) {
    if (this->support() != support) throw std::invalid_argument("values must be defined exactly on the support");
}

NodeSet Subcube::support() const {
    NodeSet s;
    for (int i = 1; i <= n_; ++i)
        if (fixed_ & (state_t{1} << (n_ - i))) s.insert(i);
    return s;
}

int Subcube::value_at(int node) const {
    const state_t bit = node_bit(n_, node);
    if (!(fixed_ & bit)) throw std::invalid_argument("node is not in the subcube support");
    return (values_ & bit) ? 1 : 0;
}

std::vector<state_t> Subcube::points() const {
    const state_t space = static_cast<state_t>((std::uint64_t{1} << n_) - 1);
    const state_t free = space & ~fixed_;
    std::vector<state_t> out;
    out.reserve(static_cast<std::size_t>(size()));
    state_t sub = 0;
    do {
        out.push_back(values_ | sub);
        sub = (sub - free) & free;
    } while (sub != 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string Subcube::to_string() const {
    std::string out(static_cast<std::size_t>(n_), '*');
    for (int i = 1; i <= n_; ++i) {
        const state_t bit = state_t{1} << (n_ - i);
        if (fixed_ & bit) out[static_cast<std::size_t>(i - 1)] = (values_ & bit) ? '1' : '0';
    }
    return out;
}

std::optional<Subcube> intersect(const Subcube& a, const Subcube& b) {
    if (a.n() != b.n()) throw std::invalid_argument("subcube dimensions differ");
    const state_t common = a.fixed_mask() & b.fixed_mask();
    if (((a.values_mask() ^ b.values_mask()) & common) != 0) return std::nullopt;
    return Subcube::from_masks(a.n(), a.fixed_mask() | b.fixed_mask(), a.values_mask() | b.values_mask());
}

Subcube interval(int n, state_t x, state_t y) {
    const state_t space = static_cast<state_t>((std::uint64_t{1} << n) - 1);
    if ((x & ~space) || (y & ~space)) throw std::invalid_argument("state out of range");
    const state_t fixed = space & ~(x ^ y);
    return Subcube::from_masks(n, fixed, x & fixed);
}

}  // namespace autonet
