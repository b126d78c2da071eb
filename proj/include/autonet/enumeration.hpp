#pragma once

#include <cstdint>
#include <vector>

#include "autonet/network.hpp"
#include "autonet/subcube.hpp"

namespace autonet {

/// Number of partitions of {0,1}^n into subcubes, counted by backtracking
/// over the least uncovered point. With `out` non-null the partitions are
/// also listed (n <= 4). Guard: n <= 5.
std::uint64_t count_cube_partitions(int n, std::vector<std::vector<Subcube>>* out = nullptr);

/// One network per cube partition: the negation on each part (free
/// coordinates of the part flip, fixed coordinates stay). These are exactly
/// the bijective globally commutative Boolean networks. Guard: n <= 4.
std::vector<Network> enumerate_bijective_cs(int n);

}  // namespace autonet
