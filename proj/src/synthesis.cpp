#include "autonet/synthesis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "autonet/dynamics.hpp"

namespace autonet {

namespace {

struct Frame {
    state_t sigma = 0;  // union of supports
    state_t tau = 0;    // intersection of supports
    state_t alpha = 0;  // merged values on sigma
};

Frame frame_of(const Arrangement& x) {
    Frame fr;
    fr.tau = static_cast<state_t>((std::uint64_t{1} << x.n()) - 1);
    for (const Subcube& c : x.cubes()) {
        fr.sigma |= c.fixed_mask();
        fr.tau &= c.fixed_mask();
        fr.alpha |= c.values_mask();
    }
    return fr;
}

}  // namespace

const char* free_choice_name(FreeChoice c) {
    switch (c) {
        case FreeChoice::Const0: return "const0";
        case FreeChoice::Const1: return "const1";
        case FreeChoice::Negate: return "negate";
    }
    return "?";
}

const char* classify_failure_name(ClassifyFailure f) {
    switch (f) {
        case ClassifyFailure::NotArrangementContent: return "not-arrangement-content";
        case ClassifyFailure::NotUniform: return "not-uniform";
        case ClassifyFailure::TrivialInternalDimension: return "trivial-internal-dimension";
        case ClassifyFailure::TightConstantViolation: return "tight-constant-violation";
    }
    return "?";
}

Network build_arrangement_network(const ArrangementNetworkSpec& spec) {
    const Arrangement& x = spec.arrangement;
    const int n = x.n();
    const Frame fr = frame_of(x);
    const state_t space = static_cast<state_t>((std::uint64_t{1} << n) - 1);
    const state_t tight = fr.sigma & ~fr.tau;
    const state_t free_dims = space & ~fr.sigma;

    state_t free_seen = 0, const0 = 0, const1 = 0, negate = 0;
    for (const auto& [node, choice] : spec.free_choice) {
        if (node < 1 || node > n) throw std::invalid_argument("free_choice node out of range");
        const state_t bit = state_t{1} << (n - node);
        if (!(free_dims & bit)) throw std::invalid_argument("free_choice assigns a non-free dimension");
        free_seen |= bit;
        switch (choice) {
            case FreeChoice::Const0: const0 |= bit; break;
            case FreeChoice::Const1: const1 |= bit; break;
            case FreeChoice::Negate: negate |= bit; break;
        }
    }
    if (free_seen != free_dims)
        throw std::invalid_argument("free_choice must assign every free dimension exactly once");

    return Network::build(2, n, [&](state_t v) -> state_t {
        if (!x.contains_point(v)) return v;
        state_t y = v;
        y = (y & ~tight) | (fr.alpha & tight);
        y &= ~const0;
        y |= const1;
        y ^= negate;
        return y;
    });
}

Network union_networks(const std::vector<Network>& parts, const Guard& guard) {
    if (parts.empty()) throw std::invalid_argument("union of zero networks is undefined");
    const int q = parts.front().q(), n = parts.front().n();
    for (const Network& p : parts)
        if (p.q() != q || p.n() != n) throw std::invalid_argument("union parts have differing dimensions");

    const std::uint64_t states = parts.front().state_count();
    std::vector<std::int32_t> owner(states, -1);
    for (std::size_t a = 0; a < parts.size(); ++a) {
        const ComponentDecomposition comp = components(parts[a], guard);
        for (const auto& members : comp.components) {
            if (members.size() <= 1) continue;
            for (state_t x : members) {
                if (owner[x] >= 0)
                    throw UnionOverlapError(x, "reachable regions overlap at configuration index " +
                                                   std::to_string(x));
                owner[x] = static_cast<std::int32_t>(a);
            }
        }
    }
    return Network::build(q, n, [&](state_t x) {
        return owner[x] < 0 ? x : parts[static_cast<std::size_t>(owner[x])].apply_index(x);
    });
}

ClassificationReport classify(const Network& f, const Guard& guard) {
    if (f.q() != 2) throw std::invalid_argument("classification is defined for Boolean networks only");
    const int n = f.n();
    const ComponentDecomposition comp = components(f, guard);

    ClassificationReport report{true, {}};
    for (const auto& members : comp.components) {
        if (members.size() <= 1) continue;
        ComponentClassification cc;
        cc.members = members;

        auto fail = [&](ClassifyFailure why, int node) {
            cc.failure = why;
            cc.failing_node = node;
            report.is_globally_commutative = false;
            report.parts.push_back(std::move(cc));
        };

        std::optional<Arrangement> witness = is_arrangement_content(n, members);
        if (!witness) {
            fail(ClassifyFailure::NotArrangementContent, 0);
            continue;
        }

        // Uniformity of every f_i on the component: the image digit may
        // depend on x_i only.
        int bad_node = 0;
        for (int i = 1; i <= n && !bad_node; ++i) {
            const state_t bit = state_t{1} << (n - i);
            int img[2] = {-1, -1};
            for (state_t x : members) {
                const int v = (x & bit) ? 1 : 0;
                const int fv = (f.apply_index(x) & bit) ? 1 : 0;
                if (img[v] < 0)
                    img[v] = fv;
                else if (img[v] != fv) {
                    bad_node = i;
                    break;
                }
            }
        }
        if (bad_node) {
            fail(ClassifyFailure::NotUniform, bad_node);
            continue;
        }

        const SetDimensions dims = classify_set_dimensions(n, members);

        // Free dimensions: recover the uniform unary map; identity is not
        // allowed on an internal dimension. (External dimensions are
        // necessarily trivial on a component: a nontrivial image would put
        // an arc outside the component.)
        std::map<int, FreeChoice> choices;
        bool ok = true;
        dims.free.for_each_node([&](int j) {
            if (!ok) return;
            const state_t bit = state_t{1} << (n - j);
            int img[2] = {-1, -1};
            for (state_t x : members) img[(x & bit) ? 1 : 0] = (f.apply_index(x) & bit) ? 1 : 0;
            if (img[0] == 0 && img[1] == 0)
                choices.emplace(j, FreeChoice::Const0);
            else if (img[0] == 1 && img[1] == 1)
                choices.emplace(j, FreeChoice::Const1);
            else if (img[0] == 1 && img[1] == 0)
                choices.emplace(j, FreeChoice::Negate);
            else {
                ok = false;
                bad_node = j;
            }
        });
        if (!ok) {
            fail(ClassifyFailure::TrivialInternalDimension, bad_node);
            continue;
        }

        // Tight dimensions: f_i must be constant at the complement of every
        // border value.
        dims.tight.for_each_node([&](int i) {
            if (!ok) return;
            const state_t bit = state_t{1} << (n - i);
            const auto& zs = dims.borders.at(i);
            const state_t want = (zs.front() & bit) ? 0 : bit;  // = not z_i
            for (state_t z : zs) {
                if ((z & bit) != (zs.front() & bit)) {  // inconsistent borders: unsatisfiable
                    ok = false;
                    bad_node = i;
                    return;
                }
            }
            for (state_t x : members) {
                if ((f.apply_index(x) & bit) != want) {
                    ok = false;
                    bad_node = i;
                    return;
                }
            }
        });
        if (!ok) {
            fail(ClassifyFailure::TightConstantViolation, bad_node);
            continue;
        }

        cc.spec = ArrangementNetworkSpec{std::move(*witness), std::move(choices)};
        report.parts.push_back(std::move(cc));
    }
    return report;
}

Network random_commutative_network(int n, std::uint64_t seed) {
    if (n < 1 || n > 16) throw std::invalid_argument("random generation supports 1 <= n <= 16");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const std::uint64_t states = std::uint64_t{1} << n;
    std::vector<bool> covered(states, false);

    std::vector<Network> parts;
    for (std::uint64_t p = 0; p < states; ++p) {
        if (covered[p]) continue;
        if (rng() % 100 < 35) {
            covered[p] = true;  // untouched fixed point
            continue;
        }
        const auto anchor = static_cast<state_t>(p);
        std::vector<Subcube> cubes;
        const int want = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < want; ++k) {
            Subcube cube = Subcube::point(n, anchor);
            for (int attempt = 0; attempt < 8; ++attempt) {
                const auto fixed = static_cast<state_t>(rng() & (states - 1));
                Subcube candidate = Subcube::from_masks(n, fixed, anchor & fixed);
                bool fits = true;
                for (state_t x : candidate.points())
                    if (covered[x] && x != anchor) fits = false;
                if (fits) {
                    cube = candidate;
                    break;
                }
            }
            bool redundant = false;
            for (const Subcube& c : cubes)
                if (c.contains(cube) || cube.contains(c)) redundant = true;
            if (!redundant) cubes.push_back(cube);
        }
        Arrangement arr = Arrangement::validate(n, std::move(cubes));  // all cubes contain the anchor

        const DimensionReport rep = dimension_report(arr);
        ArrangementNetworkSpec spec{arr, {}};
        rep.free.for_each_node([&](int j) {
            static constexpr FreeChoice kChoices[3] = {FreeChoice::Const0, FreeChoice::Const1,
                                                       FreeChoice::Negate};
            spec.free_choice.emplace(j, kChoices[rng() % 3]);
        });
        for (state_t x : arr.content()) covered[x] = true;
        parts.push_back(build_arrangement_network(spec));
    }
    if (parts.empty()) return Network::identity(2, n);
    return union_networks(parts);
}

}  // namespace autonet
