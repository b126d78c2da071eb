#pragma once

#include <ostream>

#include "autonet/dynamics.hpp"

namespace autonet {

struct DotOptions {
    bool full_arcs = false;  ///< all interval arcs instead of single-coordinate arcs
};

/// DOT rendering of the transition graph: one edge per single-coordinate
/// arc by default (full interval arcs with full_arcs), opposite arcs merged
/// into a dir=both edge, unreachable fixed points drawn gray.
void write_transition_graph_dot(std::ostream& os, const Network& f, const DotOptions& options = {},
                                const Guard& guard = {});

}  // namespace autonet
