#pragma once

#include <optional>
#include <vector>

#include "autonet/network.hpp"

namespace autonet {

/// Which pairs of node sets a commutativity sweep compares.
enum class PairLevel {
    Pairwise,         ///< singletons {i}, {j}            (C1 / IC1)
    DisjointSubsets,  ///< disjoint subsets               (finite-block C2 / IC2 variant)
    AllSubsets,       ///< arbitrary subsets              (C3 / IC3)
};

struct CommutativityWitness {
    NodeSet first;
    NodeSet second;
    state_t state = 0;
};

struct CommutativityVerdict {
    bool holds = false;
    std::optional<CommutativityWitness> witness;  // present iff !holds
};

/// Decides f^(s,t) = f^(t,s) over all pairs of the requested level, or in
/// strengthened mode f^(s,t) = f^(s u t) over all ordered pairs (including
/// s = t, so strengthened-pairwise subsumes single-node idempotence).
/// The witness, when present, is the smallest failing (s, t, x) in
/// (colex, colex, index) order.
CommutativityVerdict check_commutativity(const Network& f, PairLevel level, bool strengthened = false,
                                         const Guard& guard = {});

/// Pairwise verdict, exposed as the fast global-commutativity decision:
/// over a finite node set every local function has finite influences, so
/// local and global commutativity coincide. The equivalence is proven by
/// the acceptance suite rather than assumed silently; the all-subsets path
/// stays available through check_commutativity.
CommutativityVerdict check_global_commutative_fast(const Network& f, const Guard& guard = {});

/// True iff f^Y = f as tables.
bool schedule_invariance(const Network& f, const Schedule& y);

/// All minimal influences of f_i for the ordered pair (x, y): node sets u
/// with f_i(x on Z\u, y on u) = f_i(y) and no proper subset doing the same.
/// Sorted by (cardinality, colex).
struct InfluenceSet {
    std::vector<NodeSet> minimal;
};

InfluenceSet influences(const Network& f, int node, state_t x, state_t y);
InfluenceSet influences(const Network& f, int node, const Configuration& x, const Configuration& y);

/// Nodes j such that f_i distinguishes some pair of configurations that
/// differ only at j. Every minimal influence of f_i is contained in it.
NodeSet support(const Network& f, int node);

}  // namespace autonet
