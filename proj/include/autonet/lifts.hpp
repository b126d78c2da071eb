#pragma once

#include "autonet/network.hpp"

namespace autonet {

/// Quaternary lift of a Boolean network: symbols pack two Boolean tracks as
/// value = 2*x1 + x2, and g(x1, x2) = (f(x2), x2). Always globally
/// commutative.
Network lift_q4(const Network& f);

/// Ternary lift of a Boolean network whose f_i never depends on x_i:
/// g_i(x) = 2 when x_i = 2, otherwise f_i(floor(x/2)). Always globally
/// commutative. Throws when the independence precondition fails.
Network lift_q3(const Network& f);

}  // namespace autonet
