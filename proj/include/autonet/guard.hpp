#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace autonet {

/// Thrown when an exhaustive operation would exceed its configured cost cap.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return ~std::uint64_t{0};
    return r;
}

/// Cost cap for exhaustive sweeps. A check refuses to run (throws
/// SizeGuardError) instead of silently sampling when the estimated sweep
/// size exceeds the cap; set enforce=false or raise cost_cap to override.
struct Guard {
    std::uint64_t cost_cap = std::uint64_t{1} << 32;
    bool enforce = true;

    void require(std::uint64_t cost, const char* what) const {
        if (enforce && cost > cost_cap)
            throw SizeGuardError(std::string(what) + ": estimated cost " + std::to_string(cost) +
                                 " exceeds cap " + std::to_string(cost_cap) +
                                 " (raise the cap or disable the guard to force)");
    }
};

}  // namespace autonet
