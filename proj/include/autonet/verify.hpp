#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace autonet {

/// Options for the theorem-verification suite. Every sweep is deterministic
/// for a fixed seed and independent of the thread count.
struct VerifyOptions {
    int threads = 0;              ///< 0 = hardware concurrency
    std::uint64_t n3_sample = 0;  ///< 0 = full 2^24 sweep of n=3 Boolean networks
    std::uint64_t q3_sample = 0;  ///< 0 = full 9^9 sweep of n=2 ternary networks
    std::uint64_t seed = 20250811;
    std::string fixture_dir = "fixtures";
    std::ostream* out = nullptr;  ///< per-criterion lines; default std::cout
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the acceptance criteria, printing one pass/fail line per criterion.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace autonet
