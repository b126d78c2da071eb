#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "autonet/network.hpp"

namespace autonet {

/// Exact orbit structure of the finite map: transient = max distance to a
/// cycle, period = lcm of all cycle lengths.
struct OrbitReport {
    std::uint64_t transient = 0;
    std::uint64_t period = 1;
};

OrbitReport orbit_analysis(const Network& f);

/// pi_q = lcm(1, 2, ..., q).
std::uint64_t pi(int q);

enum class Scope {
    Global,      ///< the map f itself
    Singletons,  ///< every single-node update f^(i)
    AllSubsets,  ///< every update f^(s)
};

struct ScopeWitness {
    NodeSet scope_set;               ///< the failing update set ({1..n} for Global)
    state_t x = 0;                   ///< failing configuration
    std::optional<state_t> x2;       ///< second configuration for collision witnesses
};

struct ScopeVerdict {
    bool holds = false;
    std::optional<ScopeWitness> witness;  // present iff !holds
};

/// Dynamical locality: g^(pi_q + q - 1) = g^(q - 1) for the map in scope.
ScopeVerdict check_dynamically_local(const Network& f, Scope scope, const Guard& guard = {});

/// Bijectivity of the map in scope; a failure witness is the first pair of
/// configurations found to collide.
ScopeVerdict check_bijective(const Network& f, Scope scope, const Guard& guard = {});

/// Idempotence: g^2 = g for the map in scope.
ScopeVerdict check_idempotent(const Network& f, Scope scope, const Guard& guard = {});

/// Weakly connected components of the transition graph Gamma(f), which has
/// an arc x -> f^(s)(x) for every subset s. The arcs out of x span exactly
/// the interval subcube between x and f(x), so they are enumerated as the
/// 2^|delta(x, f(x))| per-coordinate mixtures without being materialized.
struct ComponentDecomposition {
    std::vector<std::vector<state_t>> components;  ///< ordered by least member; members ascending
    std::vector<std::uint32_t> component_of;       ///< size q^n
    std::vector<state_t> unreachable_fixed;        ///< U(f): singleton components
    std::vector<state_t> fixed_points;             ///< {x : f(x) = x}
    std::vector<state_t> gardens_of_eden;          ///< {y : f^-1(y) empty}
};

ComponentDecomposition components(const Network& f, const Guard& guard = {});

}  // namespace autonet
