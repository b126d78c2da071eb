#include <doctest.h>

#include <random>
#include <set>

#include "autonet/arrangement.hpp"
#include "autonet/commutativity.hpp"
#include "autonet/dynamics.hpp"
#include "autonet/enumeration.hpp"
#include "autonet/lifts.hpp"
#include "autonet/netdoc.hpp"
#include "autonet/synthesis.hpp"
#include "oracles.hpp"

using namespace autonet;

namespace {

std::string fixture(const char* name) { return std::string(AUTONET_FIXTURE_DIR) + "/" + name; }

std::vector<state_t> x3_content() { return {0b000, 0b010, 0b100, 0b101, 0b110, 0b111}; }

std::vector<state_t> points_of_mask(int n, std::uint32_t mask) {
    std::vector<state_t> out;
    for (std::uint32_t x = 0; x < (1u << n); ++x)
        if (mask & (1u << x)) out.push_back(static_cast<state_t>(x));
    return out;
}

}  // namespace

TEST_CASE("subcube operations") {
    const Subcube a = Subcube::from_values(3, {{3, 0}});
    const Subcube b = Subcube::from_values(3, {{1, 1}});
    const auto ab = intersect(a, b);
    REQUIRE(ab.has_value());
    CHECK(*ab == Subcube::from_values(3, {{1, 1}, {3, 0}}));

    CHECK_FALSE(intersect(Subcube::from_values(2, {{1, 0}}), Subcube::from_values(2, {{1, 1}})).has_value());

    CHECK(interval(3, 0b000, 0b110) == Subcube::from_values(3, {{3, 0}}));
    CHECK(interval(2, 0b01, 0b01) == Subcube::point(2, 0b01));

    CHECK(a.member(0b100));
    CHECK_FALSE(a.member(0b101));
    CHECK(a.contains(*ab));
    CHECK_FALSE(ab->contains(a));
    CHECK(a.points() == std::vector<state_t>{0b000, 0b010, 0b100, 0b110});
    CHECK(a.to_string() == "**0");
    CHECK(Subcube::from_values(3, {{1, 1}, {3, 0}}).to_string() == "1*0");
}

TEST_CASE("arrangement validation") {
    CHECK_NOTHROW(load_arrangement(fixture("x1.json")));

    std::vector<Subcube> disjoint = {Subcube::from_values(2, {{1, 0}}), Subcube::from_values(2, {{1, 1}})};
    CHECK_THROWS_AS(Arrangement::validate(2, disjoint), ArrangementValidationError);
    try {
        Arrangement::validate(2, disjoint);
    } catch (const ArrangementValidationError& e) {
        CHECK(e.kind() == ArrangementValidationError::Kind::DisjointPair);
        CHECK(e.first() == 0);
        CHECK(e.second() == 1);
    }

    std::vector<Subcube> nested = {Subcube::from_values(2, {{1, 1}}),
                                   Subcube::from_values(2, {{1, 1}, {2, 1}})};
    CHECK_THROWS_AS(Arrangement::validate(2, nested), ArrangementValidationError);
    try {
        Arrangement::validate(2, nested);
    } catch (const ArrangementValidationError& e) {
        CHECK(e.kind() == ArrangementValidationError::Kind::ContainmentPair);
    }
}

TEST_CASE("dimension reports of the four fixture arrangements") {
    const DimensionReport r1 = dimension_report(load_arrangement(fixture("x1.json")));
    CHECK(r1.tight == NodeSet::of({1, 2}));
    CHECK(r1.external == NodeSet::of({3}));
    CHECK(r1.free == NodeSet{});
    CHECK(r1.enclosing == Subcube::from_values(3, {{3, 0}}));
    CHECK(r1.intersection == Subcube::from_values(3, {{1, 0}, {2, 0}, {3, 0}}));

    const DimensionReport r2 = dimension_report(load_arrangement(fixture("x2.json")));
    CHECK(r2.tight == NodeSet::of({1, 2, 3}));
    CHECK(r2.intersection == Subcube::point(3, 0b110));

    const DimensionReport r3 = dimension_report(load_arrangement(fixture("x3.json")));
    CHECK(r3.tight == NodeSet::of({1, 3}));
    CHECK(r3.free == NodeSet::of({2}));
    CHECK(r3.external == NodeSet{});
    CHECK(r3.intersection == Subcube::from_values(3, {{1, 1}, {3, 0}}));

    const DimensionReport r4 = dimension_report(load_arrangement(fixture("x4.json")));
    CHECK(r4.tight == NodeSet::of({1, 2, 3}));
    CHECK(r4.free == NodeSet{});
}

TEST_CASE("set dimension classes") {
    const SetDimensions d3 = classify_set_dimensions(3, x3_content());
    CHECK(d3.tight == NodeSet::of({1, 3}));
    CHECK(d3.free == NodeSet::of({2}));
    CHECK(d3.external == NodeSet{});
    CHECK(d3.borders.at(1) == std::vector<state_t>{0b001, 0b011});
    CHECK(d3.borders.at(3) == std::vector<state_t>{0b001, 0b011});

    std::vector<state_t> whole = {0, 1, 2, 3};
    const SetDimensions dw = classify_set_dimensions(2, whole);
    CHECK(dw.free == NodeSet::of({1, 2}));

    const SetDimensions dp = classify_set_dimensions(3, {0b000});
    CHECK(dp.external == NodeSet::of({1, 2, 3}));

    CHECK_THROWS_AS(classify_set_dimensions(2, {}), std::invalid_argument);
}

TEST_CASE("arrangement dimension classes match the direct point-set classes") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 10000; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Subcube> cubes;
        for (int tries = 0; tries < 12 && cubes.size() < 3; ++tries) {
            const auto fixed = static_cast<state_t>(rng() & ((1u << n) - 1));
            const auto values = static_cast<state_t>(rng() & fixed);
            const Subcube c = Subcube::from_masks(n, fixed, values);
            bool ok = true;
            for (const Subcube& other : cubes) {
                if (!intersect(c, other)) ok = false;
                if (c.contains(other) || other.contains(c)) ok = false;
            }
            if (ok) cubes.push_back(c);
        }
        const Arrangement arr = Arrangement::validate(n, cubes);
        const DimensionReport rep_arr = dimension_report(arr);

        // The intersection cube is nonempty and inside every member.
        for (const Subcube& c : arr.cubes()) CHECK(c.contains(rep_arr.intersection));
        CHECK(rep_arr.intersection.size() >= 1);

        const SetDimensions direct = classify_set_dimensions(n, arr.content());
        CHECK(rep_arr.tight == direct.tight);
        CHECK(rep_arr.free == direct.free);
        CHECK(rep_arr.external == direct.external);
    }
}

TEST_CASE("maximal subcubes") {
    const auto primes = maximal_subcubes(3, x3_content());
    REQUIRE(primes.size() == 2);
    const std::set<std::string> got{primes[0].to_string(), primes[1].to_string()};
    CHECK(got == std::set<std::string>{"**0", "1**"});

    const auto two_points = maximal_subcubes(2, {0b00, 0b11});
    REQUIRE(two_points.size() == 2);
    CHECK(two_points[0].size() == 1);

    const auto whole = maximal_subcubes(2, {0, 1, 2, 3});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == Subcube::full_cube(2));
}

TEST_CASE("maximal subcube properties on random sets") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 400; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const std::uint32_t mask = static_cast<std::uint32_t>(rng() % ((1u << (1u << n)) - 1)) + 1;
        const std::vector<state_t> c = points_of_mask(n, mask);
        const auto cubes = maximal_subcubes(n, c);
        std::set<state_t> covered;
        std::vector<bool> in(std::size_t{1} << n, false);
        for (state_t x : c) in[x] = true;
        for (const Subcube& cube : cubes) {
            for (state_t x : cube.points()) {
                CHECK(in[x]);
                covered.insert(x);
            }
            // Freeing any fixed position leaves C.
            cube.support().for_each_node([&](int i) {
                const state_t bit = state_t{1} << (n - i);
                const Subcube wider = Subcube::from_masks(n, cube.fixed_mask() & ~bit,
                                                          cube.values_mask() & ~bit);
                bool inside = true;
                for (state_t x : wider.points())
                    if (!in[x]) inside = false;
                CHECK_FALSE(inside);
            });
            for (const Subcube& other : cubes)
                if (!(cube == other)) CHECK_FALSE(cube.contains(other));
        }
        CHECK(covered.size() == c.size());
    }
}

TEST_CASE("arrangement content decision with witness") {
    const auto witness = is_arrangement_content(3, x3_content());
    REQUIRE(witness.has_value());
    CHECK(witness->content() == x3_content());

    CHECK_FALSE(is_arrangement_content(2, {0b00, 0b11}).has_value());

    const Subcube cube = Subcube::from_values(3, {{2, 1}});
    const auto self = is_arrangement_content(3, cube.points());
    REQUIRE(self.has_value());
    REQUIRE(self->cubes().size() == 1);
    CHECK(self->cubes()[0] == cube);
}

TEST_CASE("arrangement content decision matches the cover-search oracle") {
    for (int n = 1; n <= 3; ++n) {
        const std::uint32_t sets = 1u << (1u << n);
        for (std::uint32_t mask = 1; mask < sets; ++mask) {
            const std::vector<state_t> c = points_of_mask(n, mask);
            const auto mine = is_arrangement_content(n, c);
            CHECK(mine.has_value() == oracles::content_cover_oracle(n, c));
            if (mine) CHECK(mine->content() == c);
        }
    }
}

TEST_CASE("building the fig2 arrangement network") {
    const ArrangementNetworkSpec spec = load_spec(fixture("fig2_spec.json"));
    const Network f = build_arrangement_network(spec);
    CHECK(f == load_network(fixture("fig2.json")));
    CHECK(f.apply_index(0b000) == 0b110);
    CHECK(f.apply_index(0b011) == 0b011);

    // Single whole-cube arrangement with negate everywhere is the negation.
    ArrangementNetworkSpec neg{Arrangement::validate(2, {Subcube::full_cube(2)}),
                               {{1, FreeChoice::Negate}, {2, FreeChoice::Negate}}};
    CHECK(build_arrangement_network(neg) == Network(2, 2, {0b11, 0b10, 0b01, 0b00}));

    ArrangementNetworkSpec missing{Arrangement::validate(2, {Subcube::full_cube(2)}),
                                   {{1, FreeChoice::Negate}}};
    CHECK_THROWS_AS(build_arrangement_network(missing), std::invalid_argument);
}

TEST_CASE("unions of networks") {
    // Negation confined to each half of the square: together they negate x2.
    ArrangementNetworkSpec left{Arrangement::validate(2, {Subcube::from_values(2, {{1, 0}})}),
                                {{2, FreeChoice::Negate}}};
    ArrangementNetworkSpec right{Arrangement::validate(2, {Subcube::from_values(2, {{1, 1}})}),
                                 {{2, FreeChoice::Negate}}};
    const Network a = build_arrangement_network(left);
    const Network b = build_arrangement_network(right);
    const Network u = union_networks({a, b});
    CHECK(u == Network(2, 2, {0b01, 0b00, 0b11, 0b10}));
    CHECK(check_commutativity(u, PairLevel::AllSubsets).holds);

    CHECK(union_networks({a}) == a);
    CHECK_THROWS_AS(union_networks({a, a}), UnionOverlapError);
    CHECK_THROWS_AS(union_networks({}), std::invalid_argument);
}

TEST_CASE("classification of the named networks") {
    const ClassificationReport fig2_report = classify(load_network(fixture("fig2.json")));
    CHECK(fig2_report.is_globally_commutative);
    REQUIRE(fig2_report.parts.size() == 1);
    CHECK(fig2_report.parts[0].members == x3_content());
    REQUIRE(fig2_report.parts[0].spec.has_value());
    CHECK(fig2_report.parts[0].spec->free_choice == std::map<int, FreeChoice>{{2, FreeChoice::Negate}});

    const ClassificationReport swap_report = classify(Network(2, 2, {0b00, 0b10, 0b01, 0b11}));
    CHECK_FALSE(swap_report.is_globally_commutative);
    REQUIRE(swap_report.parts.size() == 1);
    CHECK(swap_report.parts[0].failure == ClassifyFailure::NotUniform);

    const ClassificationReport id_report = classify(Network::identity(2, 3));
    CHECK(id_report.is_globally_commutative);
    CHECK(id_report.parts.empty());

    CHECK_THROWS_AS(classify(Network::identity(3, 2)), std::invalid_argument);
}

TEST_CASE("classification round-trips the generating spec") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const std::uint32_t sets = 1u << (1u << n);
        const std::uint32_t mask = static_cast<std::uint32_t>(rng() % (sets - 1)) + 1;
        const std::vector<state_t> c = points_of_mask(n, mask);
        const auto witness = is_arrangement_content(n, c);
        if (!witness || c.size() <= 1) continue;
        const SetDimensions dims = classify_set_dimensions(n, c);
        ArrangementNetworkSpec spec{*witness, {}};
        static constexpr FreeChoice kChoices[3] = {FreeChoice::Const0, FreeChoice::Const1,
                                                   FreeChoice::Negate};
        dims.free.for_each_node([&](int j) { spec.free_choice.emplace(j, kChoices[rng() % 3]); });

        const Network f = build_arrangement_network(spec);
        const ClassificationReport report = classify(f);
        REQUIRE(report.is_globally_commutative);
        REQUIRE(report.parts.size() == 1);
        CHECK(report.parts[0].members == c);
        REQUIRE(report.parts[0].spec.has_value());
        CHECK(report.parts[0].spec->free_choice == spec.free_choice);
        CHECK(build_arrangement_network(*report.parts[0].spec) == f);

        // Components of an arrangement network: the content plus singletons.
        const auto comp = components(f);
        for (const auto& members : comp.components)
            CHECK((members.size() == 1 || members == c));
    }
}

TEST_CASE("random commutative generator is sound") {
    for (int seed = 0; seed < 50; ++seed) {
        const Network f = random_commutative_network(3, 500 + seed);
        CHECK(check_commutativity(f, PairLevel::AllSubsets).holds);
        CHECK(classify(f).is_globally_commutative);
    }
    // Unions over four nodes, beyond the exhaustive acceptance space.
    for (int seed = 0; seed < 50; ++seed) {
        const Network f = random_commutative_network(4, 900 + seed);
        CHECK(check_commutativity(f, PairLevel::AllSubsets).holds);
        CHECK(classify(f).is_globally_commutative);
    }
}

TEST_CASE("cube partition counting") {
    CHECK(count_cube_partitions(1) == 2);
    CHECK(count_cube_partitions(2) == 8);
    for (int n = 1; n <= 3; ++n) {
        // Count by filtering all set partitions of the cube's points.
        std::vector<std::vector<state_t>> blocks;
        std::uint64_t oracle = 0;
        auto rec = [&](auto&& self, std::uint32_t x) -> void {
            const std::uint32_t states = 1u << n;
            if (x == states) {
                for (const auto& b : blocks) {
                    state_t lo = b.front(), hi = b.front();
                    for (state_t v : b) {
                        lo &= v;
                        hi |= v;
                    }
                    if (b.size() != (std::size_t{1} << std::popcount(static_cast<std::uint32_t>(hi & ~lo))))
                        return;
                }
                ++oracle;
                return;
            }
            for (std::size_t i = 0; i < blocks.size(); ++i) {  // indices: the recursion grows `blocks`
                blocks[i].push_back(static_cast<state_t>(x));
                self(self, x + 1);
                blocks[i].pop_back();
            }
            blocks.emplace_back(1, static_cast<state_t>(x));
            self(self, x + 1);
            blocks.pop_back();
        };
        rec(rec, 0);
        CHECK(count_cube_partitions(n) == oracle);
    }
    CHECK_THROWS_AS(count_cube_partitions(6), SizeGuardError);
}

TEST_CASE("bijective globally commutative networks") {
    const auto n1 = enumerate_bijective_cs(1);
    REQUIRE(n1.size() == 2);
    const Network neg1(2, 1, {1, 0});
    CHECK((n1[0] == neg1 || n1[1] == neg1));
    CHECK((n1[0] == Network::identity(2, 1) || n1[1] == Network::identity(2, 1)));

    for (int n = 1; n <= 3; ++n) {
        const auto nets = enumerate_bijective_cs(n);
        CHECK(nets.size() == count_cube_partitions(n));
        std::set<std::vector<state_t>> distinct;
        for (const Network& f : nets) {
            distinct.insert(f.table());
            CHECK(check_bijective(f, Scope::Global).holds);
            CHECK(check_commutativity(f, PairLevel::AllSubsets).holds);
        }
        CHECK(distinct.size() == nets.size());
    }
}

TEST_CASE("lifts") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 10; ++rep) {
        const Network f = oracles::random_network(2, 1 + static_cast<int>(rng() % 3), rng);
        const Network g = lift_q4(f);
        CHECK(g.q() == 4);
        CHECK(check_commutativity(g, PairLevel::AllSubsets).holds);
    }

    const Network swap_net(2, 2, {0b00, 0b10, 0b01, 0b11});
    const Network g3 = lift_q3(swap_net);
    CHECK(g3.q() == 3);
    CHECK(check_commutativity(g3, PairLevel::AllSubsets).holds);
    // The letter 2 is frozen coordinatewise.
    const auto frozen = static_cast<state_t>(g3.encode({1, 2}));
    CHECK(g3.apply_index(frozen) == frozen);  // x_2 = 2 stays, f_1(hat(1,2)) = f_1(0,1) = 1
    // Non-2 letters evolve through the floor projection: (0,1) projects to (0,0).
    CHECK(g3.apply_index(static_cast<state_t>(g3.encode({0, 1}))) == g3.encode({0, 0}));

    CHECK_THROWS_AS(lift_q3(Network::identity(2, 2)), std::invalid_argument);
}
