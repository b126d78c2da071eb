#include "autonet/commutativity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace autonet {

namespace {

// Precomputed update step for one node set, so the per-configuration work in
// a sweep is O(1) for q=2 and O(|s|) otherwise.
struct Step {
    state_t dm = 0;
    int cnt = 0;
    std::array<std::uint32_t, Network::kMaxNodes> pw{};

    Step() = default;
    Step(const Network& f, NodeSet s) {
        if (f.q() == 2) {
            dm = f.digit_mask(s);
        } else {
            s.for_each_node([&](int i) { pw[static_cast<std::size_t>(cnt++)] = f.pow_of(i); });
        }
    }

    state_t run(const Network& f, state_t x) const {
        const state_t y = f.apply_index(x);
        if (f.q() == 2) return (y & dm) | (x & static_cast<state_t>(~dm));
        const auto q = static_cast<std::uint32_t>(f.q());
        for (int k = 0; k < cnt; ++k) {
            const std::int64_t p = pw[static_cast<std::size_t>(k)];
            const int dx = static_cast<int>((x / p) % q);
            const int dy = static_cast<int>((y / p) % q);
            x = static_cast<state_t>(static_cast<std::int64_t>(x) + static_cast<std::int64_t>(dy - dx) * p);
        }
        return x;
    }
};

std::uint64_t pow3(int n) {
    std::uint64_t r = 1;
    for (int k = 0; k < n; ++k) r *= 3;
    return r;
}

}  // namespace

CommutativityVerdict check_commutativity(const Network& f, PairLevel level, bool strengthened,
                                         const Guard& guard) {
    const int n = f.n();
    const std::uint64_t states = f.state_count();
    const std::uint32_t full = NodeSet::full(n).mask();

    std::uint64_t pair_bound = 0;
    const char* what = "commutativity sweep";
    switch (level) {
        case PairLevel::Pairwise:
            pair_bound = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
            break;
        case PairLevel::DisjointSubsets:
            pair_bound = pow3(n);
            break;
        case PairLevel::AllSubsets:
            pair_bound = sat_mul(std::uint64_t{1} << n, std::uint64_t{1} << n);
            break;
    }
    guard.require(sat_mul(pair_bound, states), what);

    // Pairs with an empty set can never fail (f^(0) = id commutes with
    // everything and f^(0 u t) = f^(t)), nor can s = t in plain mode, so
    // those pairs are skipped without affecting the verdict or the minimal
    // witness.
    auto test_pair = [&](std::uint32_t sm, std::uint32_t tm) -> std::optional<CommutativityWitness> {
        const NodeSet s = NodeSet::from_mask(sm);
        const NodeSet t = NodeSet::from_mask(tm);
        const Step ss(f, s), st(f, t);
        const Step su = strengthened ? Step(f, s | t) : Step();
        for (state_t x = 0; x < states; ++x) {
            const state_t a = st.run(f, ss.run(f, x));
            const state_t b = strengthened ? su.run(f, x) : ss.run(f, st.run(f, x));
            if (a != b) return CommutativityWitness{s, t, x};
        }
        return std::nullopt;
    };

    if (level == PairLevel::Pairwise) {
        for (int i = 1; i <= n; ++i) {
            const std::uint32_t sm = 1u << (i - 1);
            if (strengthened) {
                for (int j = 1; j <= n; ++j)
                    if (auto w = test_pair(sm, 1u << (j - 1))) return {false, w};
            } else {
                for (int j = i + 1; j <= n; ++j)
                    if (auto w = test_pair(sm, 1u << (j - 1))) return {false, w};
            }
        }
        return {true, std::nullopt};
    }

    const bool disjoint = level == PairLevel::DisjointSubsets;
    for (std::uint32_t sm = 1; sm <= full; ++sm) {
        const std::uint32_t t0 = strengthened ? 1 : sm + 1;
        for (std::uint32_t tm = t0; tm <= full; ++tm) {
            if (disjoint && (sm & tm)) continue;
            if (!strengthened && tm == sm) continue;
            if (auto w = test_pair(sm, tm)) return {false, w};
        }
    }
    return {true, std::nullopt};
}

CommutativityVerdict check_global_commutative_fast(const Network& f, const Guard& guard) {
    return check_commutativity(f, PairLevel::Pairwise, false, guard);
}

bool schedule_invariance(const Network& f, const Schedule& y) {
    return schedule_network(f, y) == f;
}

InfluenceSet influences(const Network& f, int node, state_t x, state_t y) {
    if (node < 1 || node > f.n()) throw std::invalid_argument("node index out of range");

    const NodeSet d = delta_index(f, x, y);
    const int target = f.digit(f.apply_index(y), node);

    // f_i(x overwritten by y on the node set u).
    auto phi_mix = [&](std::uint32_t u_nodes) {
        state_t z = x;
        NodeSet::from_mask(u_nodes).for_each_node([&](int j) { z = f.with_digit(z, j, f.digit(y, j)); });
        return f.digit(f.apply_index(z), node);
    };

    // Every influence is contained in delta(x,y); enumerate its subsets by
    // increasing cardinality and prune proper supersets of found influences.
    std::vector<std::uint32_t> subsets;
    subsets.reserve(std::size_t{1} << d.size());
    const std::uint32_t dm = d.mask();
    std::uint32_t sub = 0;
    do {
        subsets.push_back(sub);
        sub = (sub - dm) & dm;
    } while (sub != 0);
    std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        return ca != cb ? ca < cb : a < b;
    });

    InfluenceSet out;
    for (std::uint32_t u : subsets) {
        bool dominated = false;
        for (const NodeSet& v : out.minimal) {
            if ((v.mask() & ~u) == 0) {  // v subset of u; equality impossible in this order
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        if (phi_mix(u) == target) out.minimal.push_back(NodeSet::from_mask(u));
    }
    return out;
}

InfluenceSet influences(const Network& f, int node, const Configuration& x, const Configuration& y) {
    return influences(f, node, static_cast<state_t>(f.encode(x)), static_cast<state_t>(f.encode(y)));
}

NodeSet support(const Network& f, int node) {
    if (node < 1 || node > f.n()) throw std::invalid_argument("node index out of range");
    NodeSet out;
    const std::uint64_t states = f.state_count();
    for (int j = 1; j <= f.n(); ++j) {
        bool essential = false;
        for (std::uint64_t x = 0; x < states && !essential; ++x) {
            const auto xs = static_cast<state_t>(x);
            const int base = f.digit(f.apply_index(xs), node);
            for (int v = 0; v < f.q(); ++v) {
                if (v == f.digit(xs, j)) continue;
                if (f.digit(f.apply_index(f.with_digit(xs, j, v)), node) != base) {
                    essential = true;
                    break;
                }
            }
        }
        if (essential) out.insert(j);
    }
    return out;
}

}  // namespace autonet
