#include "autonet/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace autonet {

namespace {

std::string kind_message(ArrangementValidationError::Kind kind, std::size_t a, std::size_t b) {
    const char* what = kind == ArrangementValidationError::Kind::DisjointPair ? "disjoint" : "nested";
    return "cubes " + std::to_string(a) + " and " + std::to_string(b) + " are " + what;
}

std::vector<bool> membership(int n, const std::vector<state_t>& c) {
    std::vector<bool> in(std::size_t{1} << n, false);
    for (state_t x : c) {
        if (x >= (std::uint64_t{1} << n)) throw std::invalid_argument("state out of range");
        in[x] = true;
    }
    return in;
}

void sort_cubes(std::vector<Subcube>& cubes) {
    std::sort(cubes.begin(), cubes.end(), [](const Subcube& a, const Subcube& b) {
        if (a.fixed_mask() != b.fixed_mask()) return a.fixed_mask() < b.fixed_mask();
        return a.values_mask() < b.values_mask();
    });
}

}  // namespace

ArrangementValidationError::ArrangementValidationError(Kind kind, std::size_t first, std::size_t second)
    : std::runtime_error(kind_message(kind, first, second)), kind_(kind), first_(first), second_(second) {}

Arrangement Arrangement::validate(int n, std::vector<Subcube> cubes) {
    if (cubes.empty()) throw std::invalid_argument("arrangement needs at least one cube");
    for (const Subcube& c : cubes)
        if (c.n() != n) throw std::invalid_argument("cube dimension differs from arrangement dimension");
    for (std::size_t i = 0; i < cubes.size(); ++i) {
        for (std::size_t j = i + 1; j < cubes.size(); ++j) {
            if (!intersect(cubes[i], cubes[j]))
                throw ArrangementValidationError(ArrangementValidationError::Kind::DisjointPair, i, j);
            if (cubes[i].contains(cubes[j]) || cubes[j].contains(cubes[i]))
                throw ArrangementValidationError(ArrangementValidationError::Kind::ContainmentPair, i, j);
        }
    }
    return Arrangement(n, std::move(cubes));
}

bool Arrangement::contains_point(state_t x) const {
    for (const Subcube& c : cubes_)
        if (c.member(x)) return true;
    return false;
}

std::vector<state_t> Arrangement::content() const {
    std::vector<bool> in(std::size_t{1} << n_, false);
    for (const Subcube& c : cubes_)
        for (state_t x : c.points()) in[x] = true;
    std::vector<state_t> out;
    for (std::uint64_t x = 0; x < in.size(); ++x)
        if (in[x]) out.push_back(static_cast<state_t>(x));
    return out;
}

DimensionReport dimension_report(const Arrangement& x, const Guard& guard) {
    const int n = x.n();
    guard.require(sat_mul(std::uint64_t{1} << n, x.cubes().size()), "dimension report");

    state_t sigma = 0, tau = static_cast<state_t>((std::uint64_t{1} << n) - 1), alpha = 0;
    for (const Subcube& c : x.cubes()) {
        sigma |= c.fixed_mask();
        tau &= c.fixed_mask();
        alpha |= c.values_mask();  // pairwise intersection makes the values agree on overlaps
    }

    DimensionReport rep{.external = {},
                        .free = {},
                        .tight = {},
                        .intersection = Subcube::from_masks(n, sigma, alpha),
                        .enclosing = Subcube::from_masks(n, tau, alpha & tau),
                        .borders = {}};
    for (int i = 1; i <= n; ++i) {
        const state_t bit = state_t{1} << (n - i);
        if (tau & bit)
            rep.external.insert(i);
        else if (!(sigma & bit))
            rep.free.insert(i);
        else
            rep.tight.insert(i);
    }

    rep.tight.for_each_node([&](int i) {
        const state_t bit = state_t{1} << (n - i);
        std::vector<state_t> zs;
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
            const auto zz = static_cast<state_t>(z);
            if (!x.contains_point(zz) && x.contains_point(zz ^ bit)) zs.push_back(zz);
        }
        rep.borders.emplace(i, std::move(zs));
    });
    return rep;
}

SetDimensions classify_set_dimensions(int n, const std::vector<state_t>& c) {
    if (c.empty()) throw std::invalid_argument("dimension classes of an empty set are undefined");
    const std::vector<bool> in = membership(n, c);

    SetDimensions out;
    for (int i = 1; i <= n; ++i) {
        const state_t bit = state_t{1} << (n - i);
        bool seen0 = false, seen1 = false, free = true;
        for (state_t x : c) {
            ((x & bit) ? seen1 : seen0) = true;
            if (!in[x ^ bit]) free = false;
        }
        if (!(seen0 && seen1)) {
            out.external.insert(i);
        } else if (free) {
            out.free.insert(i);
        } else {
            out.tight.insert(i);
            std::vector<state_t> zs;
            for (state_t x : c)
                if (!in[x ^ bit]) zs.push_back(x ^ bit);
            std::sort(zs.begin(), zs.end());
            zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
            out.borders.emplace(i, std::move(zs));
        }
    }
    return out;
}

std::vector<Subcube> maximal_subcubes(int n, const std::vector<state_t>& c, const Guard& guard) {
    if (c.empty()) throw std::invalid_argument("maximal subcubes of an empty set are undefined");
    std::uint64_t p3 = 1;
    for (int k = 0; k < n; ++k) p3 *= 3;
    guard.require(sat_mul(p3, static_cast<std::uint64_t>(n) + 1), "maximal subcube enumeration");

    const std::vector<bool> in = membership(n, c);
    const std::uint64_t supports = std::uint64_t{1} << n;

    // inside[off[s] + pack(v, s)] says whether the cube (s, v) lies in C.
    std::vector<std::uint64_t> off(supports);
    std::uint64_t total = 0;
    for (std::uint64_t s = 0; s < supports; ++s) {
        off[s] = total;
        total += std::uint64_t{1} << std::popcount(s);
    }
    std::vector<std::uint8_t> inside(total, 0);

    auto pack = [](state_t v, state_t s) {
        std::uint32_t out = 0;
        int k = 0;
        while (s) {
            const state_t low = s & (~s + 1);
            if (v & low) out |= 1u << k;
            ++k;
            s &= s - 1;
        }
        return out;
    };
    auto unpack = [](std::uint32_t packed, state_t s) {
        state_t v = 0;
        while (s) {
            const state_t low = s & (~s + 1);
            if (packed & 1u) v |= low;
            packed >>= 1;
            s &= s - 1;
        }
        return v;
    };

    std::vector<std::uint32_t> order(supports);
    for (std::uint64_t s = 0; s < supports; ++s) order[s] = static_cast<std::uint32_t>(s);
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });

    const auto full = static_cast<state_t>(supports - 1);
    for (std::uint32_t s : order) {
        const std::uint32_t combos = 1u << std::popcount(s);
        if (s == full) {
            for (std::uint32_t v = 0; v < combos; ++v) inside[off[s] + v] = in[v] ? 1 : 0;
            continue;
        }
        const state_t d = (~s & full) & (~(~s & full) + 1);  // lowest free position
        const state_t s2 = s | d;
        for (std::uint32_t idx = 0; idx < combos; ++idx) {
            const state_t v = unpack(idx, s);
            inside[off[s] + idx] =
                inside[off[s2] + pack(v, s2)] && inside[off[s2] + pack(v | d, s2)];
        }
    }

    std::vector<Subcube> out;
    for (std::uint64_t s = 0; s < supports; ++s) {
        const std::uint32_t combos = 1u << std::popcount(s);
        for (std::uint32_t idx = 0; idx < combos; ++idx) {
            if (!inside[off[s] + idx]) continue;
            const state_t v = unpack(idx, static_cast<state_t>(s));
            bool maximal = true;
            std::uint32_t rest = static_cast<std::uint32_t>(s);
            while (rest && maximal) {
                const state_t e = rest & (~rest + 1);
                rest &= rest - 1;
                const state_t s_minus = static_cast<state_t>(s) & ~e;
                if (inside[off[s_minus] + pack(v & ~e, s_minus)]) maximal = false;
            }
            if (maximal) out.push_back(Subcube::from_masks(n, static_cast<state_t>(s), v));
        }
    }
    sort_cubes(out);
    return out;
}

std::optional<Arrangement> is_arrangement_content(int n, const std::vector<state_t>& c) {
    if (c.empty()) throw std::invalid_argument("the empty set is not an arrangement content");
    const std::vector<bool> in = membership(n, c);
    std::vector<state_t> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    auto interval_inside = [&](state_t x, state_t y) {
        const state_t d = x ^ y;
        state_t sub = 0;
        do {
            if (!in[y ^ sub]) return false;
            sub = (sub - d) & d;
        } while (sub != 0);
        return true;
    };

    for (state_t y : sorted) {
        bool star = true;
        for (state_t x : sorted) {
            if (!interval_inside(x, y)) {
                star = false;
                break;
            }
        }
        if (!star) continue;

        std::vector<Subcube> cubes;
        for (state_t x : sorted) cubes.push_back(interval(n, x, y));
        sort_cubes(cubes);
        cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
        std::vector<Subcube> maximal;
        for (std::size_t i = 0; i < cubes.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < cubes.size() && !dominated; ++j)
                if (i != j && cubes[j].contains(cubes[i]) && !(cubes[i] == cubes[j])) dominated = true;
            if (!dominated) maximal.push_back(cubes[i]);
        }
        // All members contain y and none contains another, so validation holds.
        return Arrangement::validate(n, std::move(maximal));
    }
    return std::nullopt;
}

}  // namespace autonet
