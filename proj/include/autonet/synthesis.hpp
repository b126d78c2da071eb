#pragma once

#include <map>
#include <optional>
#include <vector>

#include "autonet/arrangement.hpp"
#include "autonet/network.hpp"

namespace autonet {

/// The three uniform nontrivial unary maps on {0,1} a free dimension of an
/// arrangement network may apply.
enum class FreeChoice { Const0, Const1, Negate };

const char* free_choice_name(FreeChoice c);

struct ArrangementNetworkSpec {
    Arrangement arrangement;
    std::map<int, FreeChoice> free_choice;  ///< keyed by free dimension, exactly
};

/// Table realization of an arrangement network: identity outside the
/// content; inside it tight dimensions snap to the intersection values,
/// free dimensions apply their chosen unary map, external dimensions stay.
Network build_arrangement_network(const ArrangementNetworkSpec& spec);

/// Raised by union_networks when two parts share a reachable configuration.
class UnionOverlapError : public std::runtime_error {
public:
    UnionOverlapError(state_t x, const std::string& what) : std::runtime_error(what), state_(x) {}
    state_t state() const { return state_; }

private:
    state_t state_;
};

/// Union of networks with pairwise disjoint reachable regions R(f) (the
/// complements of the unreachable-fixed-point sets); F acts as the owning
/// part on each reachable configuration and as the identity elsewhere.
Network union_networks(const std::vector<Network>& parts, const Guard& guard = {});

enum class ClassifyFailure {
    NotArrangementContent,
    NotUniform,
    TrivialInternalDimension,
    TightConstantViolation,
};

const char* classify_failure_name(ClassifyFailure f);

/// Verdict for one nontrivial (non-singleton) component of Gamma(f).
struct ComponentClassification {
    std::vector<state_t> members;
    std::optional<ArrangementNetworkSpec> spec;  ///< present iff the component passes
    std::optional<ClassifyFailure> failure;
    int failing_node = 0;  ///< node involved in the failure, when applicable
};

struct ClassificationReport {
    bool is_globally_commutative = false;
    std::vector<ComponentClassification> parts;  ///< nontrivial components, by least member
};

/// Structure-theorem classifier for Boolean networks: accepts f iff every
/// nontrivial component of Gamma(f) is an arrangement content on which f is
/// uniform, nontrivial on internal dimensions, and constant opposite the
/// borders on tight dimensions — i.e. iff f is a union of arrangement
/// networks.
ClassificationReport classify(const Network& f, const Guard& guard = {});

/// Deterministic random union of arrangement networks (always globally
/// commutative); intended for fixture and corpus generation.
Network random_commutative_network(int n, std::uint64_t seed);

}  // namespace autonet
