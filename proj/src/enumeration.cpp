#include "autonet/enumeration.hpp"

#include <bit>
#include <stdexcept>

namespace autonet {

namespace {

struct CubeChoice {
    state_t fixed;
    state_t values;
    std::uint64_t points;  // bitmask over the 2^n configurations
};

std::uint64_t points_mask(int n, state_t fixed, state_t values) {
    const state_t space = static_cast<state_t>((std::uint64_t{1} << n) - 1);
    const state_t free = space & ~fixed;
    std::uint64_t mask = 0;
    state_t sub = 0;
    do {
        mask |= std::uint64_t{1} << (values | sub);
        sub = (sub - free) & free;
    } while (sub != 0);
    return mask;
}

}  // namespace

std::uint64_t count_cube_partitions(int n, std::vector<std::vector<Subcube>>* out) {
    if (n < 1 || n > 5) throw SizeGuardError("cube partition enumeration supports 1 <= n <= 5");
    if (out && n > 4) throw SizeGuardError("cube partition listing supports n <= 4");

    const std::uint64_t states = std::uint64_t{1} << n;
    const std::uint64_t all = states == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << states) - 1;

    // cubes_at[p]: every cube whose least point is p, i.e. the cubes with
    // values = p restricted to the support (any support works).
    std::vector<std::vector<CubeChoice>> cubes_at(states);
    for (std::uint64_t p = 0; p < states; ++p)
        for (std::uint64_t fixed = 0; fixed < states; ++fixed) {
            const auto fm = static_cast<state_t>(fixed);
            const auto values = static_cast<state_t>(p & fixed);
            if ((p & ~fixed) != 0) continue;  // least point of the cube is `values`, must equal p
            cubes_at[p].push_back({fm, values, points_mask(n, fm, values)});
        }

    std::uint64_t count = 0;
    std::vector<Subcube> current;
    auto rec = [&](auto&& self, std::uint64_t covered) -> void {
        if (covered == all) {
            ++count;
            if (out) out->push_back(current);
            return;
        }
        const int p = std::countr_one(covered);  // least uncovered point
        for (const CubeChoice& c : cubes_at[static_cast<std::uint64_t>(p)]) {
            if (c.points & covered) continue;
            if (out) current.push_back(Subcube::from_masks(n, c.fixed, c.values));
            self(self, covered | c.points);
            if (out) current.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

std::vector<Network> enumerate_bijective_cs(int n) {
    if (n < 1 || n > 4) throw SizeGuardError("bijective enumeration supports 1 <= n <= 4");
    std::vector<std::vector<Subcube>> partitions;
    count_cube_partitions(n, &partitions);

    const state_t space = static_cast<state_t>((std::uint64_t{1} << n) - 1);
    std::vector<Network> out;
    out.reserve(partitions.size());
    for (const auto& parts : partitions) {
        out.push_back(Network::build(2, n, [&](state_t x) -> state_t {
            for (const Subcube& c : parts)
                if (c.member(x)) return x ^ (space & ~c.fixed_mask());
            return x;  // unreachable: parts cover the cube
        }));
    }
    return out;
}

}  // namespace autonet
