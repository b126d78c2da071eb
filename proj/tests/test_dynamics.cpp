#include <doctest.h>

#include <random>

#include "autonet/commutativity.hpp"
#include "autonet/dynamics.hpp"
#include "autonet/enumeration.hpp"
#include "autonet/netdoc.hpp"
#include "autonet/synthesis.hpp"
#include "oracles.hpp"

using namespace autonet;

namespace {

Network swap2() { return Network(2, 2, {0b00, 0b10, 0b01, 0b11}); }
Network negation2() { return Network(2, 2, {0b11, 0b10, 0b01, 0b00}); }
Network constant2() { return Network(2, 2, {0b00, 0b00, 0b00, 0b00}); }
Network fig2() { return load_network(std::string(AUTONET_FIXTURE_DIR) + "/fig2.json"); }

}  // namespace

TEST_CASE("orbit analysis on the named examples") {
    CHECK(orbit_analysis(negation2()).transient == 0);
    CHECK(orbit_analysis(negation2()).period == 2);
    CHECK(orbit_analysis(constant2()).transient == 1);
    CHECK(orbit_analysis(constant2()).period == 1);
    CHECK(orbit_analysis(Network::identity(2, 2)).transient == 0);
    CHECK(orbit_analysis(Network::identity(2, 2)).period == 1);

    // Truncated power-of-three trajectory 1->3->9->27->81->243->27, relabeled
    // 0..5 on a single node over a six-letter alphabet.
    const Network prime_truncation(6, 1, {1, 2, 3, 4, 5, 3});
    CHECK(orbit_analysis(prime_truncation).transient == 3);
    CHECK(orbit_analysis(prime_truncation).period == 3);
}

TEST_CASE("orbit analysis matches the repeated-composition oracle") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 120; ++rep) {
        const int q = 2 + static_cast<int>(rng() % 2);
        const int n = 1 + static_cast<int>(rng() % 3);
        const Network f = oracles::random_network(q, n, rng);
        const OrbitReport report = orbit_analysis(f);
        const auto [t, p] = oracles::orbit_oracle(f);
        CHECK(report.transient == t);
        CHECK(report.period == p);
        CHECK(power(f, report.transient + report.period) == power(f, report.transient));
    }
}

TEST_CASE("pi") {
    CHECK(pi(2) == 2);
    CHECK(pi(3) == 6);
    CHECK(pi(4) == 12);
    CHECK(pi(6) == 60);
    CHECK_THROWS_AS(pi(1), std::invalid_argument);
}

TEST_CASE("dynamical locality") {
    CHECK(check_dynamically_local(negation2(), Scope::Global).holds);

    // 00 -> 01 -> 10 -> 00 with 11 fixed: a 3-cycle, so f^3 = id != f.
    const Network three_cycle(2, 2, {0b01, 0b10, 0b00, 0b11});
    const auto verdict = check_dynamically_local(three_cycle, Scope::Global);
    CHECK_FALSE(verdict.holds);
    CHECK(verdict.witness->scope_set == NodeSet::full(2));

    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 200; ++rep) {
        const Network f = oracles::random_network(2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 4), rng);
        CHECK(check_dynamically_local(f, Scope::Singletons).holds);
    }
}

TEST_CASE("alphabet-level power identity with minimality witnesses") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 2000; ++rep) {
        const int q = 2 + static_cast<int>(rng() % 5);
        const Network alpha = oracles::random_network(q, 1, rng);
        CHECK(check_dynamically_local(alpha, Scope::Global).holds);
    }
    for (int q = 2; q <= 6; ++q) {
        const Network chain = Network::build(q, 1, [](state_t x) { return x == 0 ? state_t{0} : x - 1; });
        CHECK(orbit_analysis(chain).transient == static_cast<std::uint64_t>(q - 1));
        std::uint64_t realized = 1;
        for (int k = 1; k <= q; ++k) {
            const Network cyc = Network::build(q, 1, [&](state_t x) {
                return x < static_cast<state_t>(k) ? (x + 1) % static_cast<state_t>(k) : x;
            });
            realized = std::lcm(realized, orbit_analysis(cyc).period);
        }
        CHECK(realized == pi(q));
    }
}

TEST_CASE("bijectivity") {
    CHECK(check_bijective(swap2(), Scope::Global).holds);
    const auto verdict = check_bijective(swap2(), Scope::Singletons);
    REQUIRE_FALSE(verdict.holds);
    CHECK(verdict.witness->scope_set == NodeSet::of({1}));
    REQUIRE(verdict.witness->x2.has_value());
    // The witness pair really collides under f^(s).
    CHECK(swap2().update_index(verdict.witness->x, verdict.witness->scope_set) ==
          swap2().update_index(*verdict.witness->x2, verdict.witness->scope_set));
    CHECK_FALSE(check_bijective(constant2(), Scope::Global).holds);
}

TEST_CASE("idempotence") {
    for (Scope scope : {Scope::Global, Scope::Singletons, Scope::AllSubsets}) {
        CHECK(check_idempotent(constant2(), scope).holds);
        // The fig2 fixture network negates its free dimension, so it is not
        // idempotent at any scope (f^2(000) = 100 != 110 = f(000)); the
        // three scopes still agree, as they must on a commutative network.
        CHECK_FALSE(check_idempotent(fig2(), scope).holds);
    }
    CHECK(fig2().apply_index(fig2().apply_index(0b000)) == 0b100);
    CHECK_FALSE(check_idempotent(negation2(), Scope::Global).holds);

    // A const0/const1 arrangement network is idempotent at every scope.
    ArrangementNetworkSpec spec{Arrangement::validate(2, {Subcube::from_values(2, {{1, 0}})}),
                                {{2, FreeChoice::Const1}}};
    const Network proj = build_arrangement_network(spec);
    for (Scope scope : {Scope::Global, Scope::Singletons, Scope::AllSubsets})
        CHECK(check_idempotent(proj, scope).holds);
}

TEST_CASE("components on the named examples") {
    const auto id_comp = components(Network::identity(2, 2));
    CHECK(id_comp.components.size() == 4);
    CHECK(id_comp.unreachable_fixed.size() == 4);

    const auto swap_comp = components(swap2());
    CHECK(swap_comp.components.size() == 1);
    CHECK(swap_comp.components[0].size() == 4);

    const auto fig2_comp = components(fig2());
    CHECK(fig2_comp.components.size() == 3);
    CHECK(fig2_comp.unreachable_fixed == std::vector<state_t>{0b001, 0b011});
    CHECK(fig2_comp.fixed_points == std::vector<state_t>{0b001, 0b011});
    // Gardens of Eden of the fig2 map: nothing maps onto 000, 010, 101, 111.
    CHECK(fig2_comp.gardens_of_eden == std::vector<state_t>{0b000, 0b010, 0b101, 0b111});
}

TEST_CASE("components match a BFS over materialized arcs") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 150; ++rep) {
        const int q = 2 + static_cast<int>(rng() % 2);
        const int n = 1 + static_cast<int>(rng() % 3);
        const Network f = oracles::random_network(q, n, rng);
        const auto mine = components(f);
        const auto oracle = oracles::bfs_components(f);
        for (std::uint64_t x = 0; x < f.state_count(); ++x)
            for (std::uint64_t y = 0; y < f.state_count(); ++y)
                CHECK((mine.component_of[x] == mine.component_of[y]) == (oracle[x] == oracle[y]));
        for (std::uint64_t x = 0; x < f.state_count(); ++x)
            CHECK(mine.component_of[x] == mine.component_of[f.apply_index(static_cast<state_t>(x))]);
    }
}

TEST_CASE("bijectivity scopes agree on globally commutative networks") {
    // Every commutative network on two nodes, found exhaustively.
    std::vector<Network> corpus;
    for (std::uint32_t code = 0; code < 256; ++code) {
        Network f(2, 2,
                  {static_cast<state_t>(code & 3), static_cast<state_t>((code >> 2) & 3),
                   static_cast<state_t>((code >> 4) & 3), static_cast<state_t>((code >> 6) & 3)});
        if (check_commutativity(f, PairLevel::AllSubsets).holds) corpus.push_back(std::move(f));
    }
    CHECK(corpus.size() == 44);
    for (const Network& f : enumerate_bijective_cs(3)) corpus.push_back(f);
    for (int seed = 0; seed < 60; ++seed) corpus.push_back(random_commutative_network(3, seed));
    corpus.push_back(fig2());
    for (const Network& f : corpus) {
        REQUIRE(check_commutativity(f, PairLevel::AllSubsets).holds);
        const bool global = check_bijective(f, Scope::Global).holds;
        CHECK(global == check_bijective(f, Scope::Singletons).holds);
        CHECK(global == check_bijective(f, Scope::AllSubsets).holds);
    }
}

TEST_CASE("idempotence scopes and strengthened commutativity agree on commutative networks") {
    for (int seed = 100; seed < 160; ++seed) {
        const Network f = random_commutative_network(2 + seed % 2, seed);
        const bool global = check_idempotent(f, Scope::Global).holds;
        CHECK(global == check_idempotent(f, Scope::Singletons).holds);
        CHECK(global == check_idempotent(f, Scope::AllSubsets).holds);
        CHECK(global == check_commutativity(f, PairLevel::AllSubsets, true).holds);
    }
}

TEST_CASE("on commutative networks the disagreement update reaches any word image") {
    std::mt19937_64 rng(37);
    for (int seed = 0; seed < 40; ++seed) {
        const Network f = random_commutative_network(3, 7000 + seed);
        REQUIRE(check_commutativity(f, PairLevel::AllSubsets).holds);
        for (std::uint64_t x = 0; x < f.state_count(); ++x) {
            for (int rep = 0; rep < 4; ++rep) {
                Word w;
                const int len = static_cast<int>(rng() % 4);
                for (int k = 0; k < len; ++k)
                    w.push_back(NodeSet::from_mask(static_cast<std::uint32_t>(rng() % 8)));
                const auto xs = static_cast<state_t>(x);
                const state_t y = f.update_word_index(xs, w);
                CHECK(f.update_index(xs, delta_index(f, xs, y)) == y);
            }
        }
    }
}

TEST_CASE("component size guard") {
    const Guard tiny{2, true};
    CHECK_THROWS_AS(components(swap2(), tiny), SizeGuardError);
}
