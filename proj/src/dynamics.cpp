#include "autonet/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace autonet {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t g = std::gcd(a, b);
    const std::uint64_t q = a / g;
    if (b != 0 && q > ~std::uint64_t{0} / b) throw std::overflow_error("orbit period exceeds 64 bits");
    return q * b;
}

// Table of the update map f^(s).
Network update_network(const Network& f, NodeSet s) {
    return Network::build(f.q(), f.n(), [&](state_t x) { return f.update_index(x, s); });
}

// Scope iteration in colex order; Global is handled by callers.
template <typename Fn>
ScopeVerdict scan_scopes(const Network& f, Scope scope, const Guard& guard, std::uint64_t per_set_cost,
                         const char* what, Fn&& test_set) {
    const int n = f.n();
    if (scope == Scope::Singletons) {
        guard.require(sat_mul(static_cast<std::uint64_t>(n), per_set_cost), what);
        for (int i = 1; i <= n; ++i)
            if (auto w = test_set(NodeSet::singleton(i))) return {false, w};
        return {true, std::nullopt};
    }
    guard.require(sat_mul(std::uint64_t{1} << n, per_set_cost), what);
    const std::uint32_t full = NodeSet::full(n).mask();
    for (std::uint32_t m = 0; m <= full; ++m)
        if (auto w = test_set(NodeSet::from_mask(m))) return {false, w};
    return {true, std::nullopt};
}

std::optional<ScopeWitness> table_mismatch(const Network& a, const Network& b, NodeSet scope_set) {
    for (std::uint64_t x = 0; x < a.state_count(); ++x)
        if (a.table()[x] != b.table()[x])
            return ScopeWitness{scope_set, static_cast<state_t>(x), std::nullopt};
    return std::nullopt;
}

}  // namespace

OrbitReport orbit_analysis(const Network& f) {
    const std::uint64_t states = f.state_count();
    std::vector<std::uint8_t> color(states, 0);  // 0 new, 1 on path, 2 done
    std::vector<std::uint32_t> depth(states, 0);
    std::vector<std::uint32_t> pos(states, 0);
    std::vector<state_t> path;

    OrbitReport report;
    for (std::uint64_t start = 0; start < states; ++start) {
        if (color[start] != 0) continue;
        path.clear();
        state_t x = static_cast<state_t>(start);
        while (color[x] == 0) {
            color[x] = 1;
            pos[x] = static_cast<std::uint32_t>(path.size());
            path.push_back(x);
            x = f.apply_index(x);
        }
        std::size_t tail_end;  // first path index that already has a depth
        if (color[x] == 1) {
            const std::size_t cycle_start = pos[x];
            const auto cycle_len = static_cast<std::uint64_t>(path.size() - cycle_start);
            report.period = checked_lcm(report.period, cycle_len);
            for (std::size_t k = cycle_start; k < path.size(); ++k) {
                color[path[k]] = 2;
                depth[path[k]] = 0;
            }
            tail_end = cycle_start;
        } else {
            tail_end = path.size();
        }
        std::uint32_t base = tail_end < path.size() ? 0 : depth[x];
        for (std::size_t k = tail_end; k-- > 0;) {
            color[path[k]] = 2;
            depth[path[k]] = base + static_cast<std::uint32_t>(tail_end - k);
        }
        if (tail_end > 0) report.transient = std::max<std::uint64_t>(report.transient, depth[path[0]]);
    }
    return report;
}

std::uint64_t pi(int q) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    std::uint64_t r = 1;
    for (int k = 2; k <= q; ++k) r = checked_lcm(r, static_cast<std::uint64_t>(k));
    return r;
}

ScopeVerdict check_dynamically_local(const Network& f, Scope scope, const Guard& guard) {
    const std::uint64_t hi = pi(f.q()) + static_cast<std::uint64_t>(f.q()) - 1;
    const std::uint64_t lo = static_cast<std::uint64_t>(f.q()) - 1;
    auto local = [&](const Network& g, NodeSet s) { return table_mismatch(power(g, hi), power(g, lo), s); };
    if (scope == Scope::Global) {
        if (auto w = local(f, NodeSet::full(f.n()))) return {false, w};
        return {true, std::nullopt};
    }
    const std::uint64_t per_set = sat_mul(f.state_count(), 8 * sizeof(std::uint64_t));
    return scan_scopes(f, scope, guard, per_set, "dynamical locality sweep",
                       [&](NodeSet s) { return local(update_network(f, s), s); });
}

ScopeVerdict check_bijective(const Network& f, Scope scope, const Guard& guard) {
    const std::uint64_t states = f.state_count();
    std::vector<std::uint32_t> stamp(states, 0);
    std::vector<state_t> pre(states, 0);
    std::uint32_t tick = 0;

    auto injective = [&](auto&& image, NodeSet s) -> std::optional<ScopeWitness> {
        ++tick;
        for (std::uint64_t x = 0; x < states; ++x) {
            const state_t y = image(static_cast<state_t>(x));
            if (stamp[y] == tick) return ScopeWitness{s, pre[y], static_cast<state_t>(x)};
            stamp[y] = tick;
            pre[y] = static_cast<state_t>(x);
        }
        return std::nullopt;
    };

    if (scope == Scope::Global) {
        if (auto w = injective([&](state_t x) { return f.apply_index(x); }, NodeSet::full(f.n())))
            return {false, w};
        return {true, std::nullopt};
    }
    return scan_scopes(f, scope, guard, states, "bijectivity sweep", [&](NodeSet s) {
        return injective([&](state_t x) { return f.update_index(x, s); }, s);
    });
}

ScopeVerdict check_idempotent(const Network& f, Scope scope, const Guard& guard) {
    const std::uint64_t states = f.state_count();
    auto idem = [&](auto&& image, NodeSet s) -> std::optional<ScopeWitness> {
        for (std::uint64_t x = 0; x < states; ++x) {
            const state_t u = image(static_cast<state_t>(x));
            if (image(u) != u) return ScopeWitness{s, static_cast<state_t>(x), std::nullopt};
        }
        return std::nullopt;
    };

    if (scope == Scope::Global) {
        if (auto w = idem([&](state_t x) { return f.apply_index(x); }, NodeSet::full(f.n())))
            return {false, w};
        return {true, std::nullopt};
    }
    return scan_scopes(f, scope, guard, states, "idempotence sweep", [&](NodeSet s) {
        return idem([&](state_t x) { return f.update_index(x, s); }, s);
    });
}

ComponentDecomposition components(const Network& f, const Guard& guard) {
    const std::uint64_t states = f.state_count();

    std::uint64_t cost = 0;
    for (std::uint64_t x = 0; x < states; ++x)
        cost += std::uint64_t{1} << delta_index(f, static_cast<state_t>(x), f.apply_index(static_cast<state_t>(x))).size();
    guard.require(cost, "transition graph components");

    std::vector<state_t> parent(states);
    for (std::uint64_t x = 0; x < states; ++x) parent[x] = static_cast<state_t>(x);
    auto find = [&](state_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](state_t a, state_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    const bool q2 = f.q() == 2;
    for (std::uint64_t xi = 0; xi < states; ++xi) {
        const auto x = static_cast<state_t>(xi);
        const state_t y = f.apply_index(x);
        if (q2) {
            const state_t dd = x ^ y;
            state_t sub = 0;
            do {
                unite(x, x ^ sub);
                sub = (sub - dd) & dd;
            } while (sub != 0);
        } else {
            const NodeSet d = delta_index(f, x, y);
            const std::uint32_t dm = d.mask();
            std::uint32_t sub = 0;
            do {
                state_t z = x;
                NodeSet::from_mask(sub).for_each_node([&](int i) { z = f.with_digit(z, i, f.digit(y, i)); });
                unite(x, z);
                sub = (sub - dm) & dm;
            } while (sub != 0);
        }
    }

    ComponentDecomposition out;
    out.component_of.assign(states, 0);
    std::vector<std::uint32_t> comp_id(states, ~std::uint32_t{0});
    for (std::uint64_t x = 0; x < states; ++x) {
        const state_t r = find(static_cast<state_t>(x));
        if (comp_id[r] == ~std::uint32_t{0}) {
            comp_id[r] = static_cast<std::uint32_t>(out.components.size());
            out.components.emplace_back();
        }
        out.component_of[x] = comp_id[r];
        out.components[comp_id[r]].push_back(static_cast<state_t>(x));
    }

    std::vector<std::uint32_t> indegree(states, 0);
    for (std::uint64_t x = 0; x < states; ++x) ++indegree[f.apply_index(static_cast<state_t>(x))];
    for (std::uint64_t x = 0; x < states; ++x) {
        const auto xs = static_cast<state_t>(x);
        if (f.apply_index(xs) == xs) out.fixed_points.push_back(xs);
        if (indegree[x] == 0) out.gardens_of_eden.push_back(xs);
    }
    for (const auto& members : out.components)
        if (members.size() == 1) out.unreachable_fixed.push_back(members.front());
    return out;
}

}  // namespace autonet
