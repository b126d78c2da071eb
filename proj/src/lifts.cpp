#include "autonet/lifts.hpp"

#include <stdexcept>

#include "autonet/commutativity.hpp"

namespace autonet {

Network lift_q4(const Network& f) {
    if (f.q() != 2) throw std::invalid_argument("lift_q4 expects a Boolean network");
    const int n = f.n();
    const Network lifted = Network::identity(4, n);  // for digit arithmetic on the q=4 side
    return Network::build(4, n, [&](state_t x) {
        state_t x2 = 0;
        for (int i = 1; i <= n; ++i)
            x2 |= static_cast<state_t>(lifted.digit(x, i) & 1) << (n - i);
        const state_t fx2 = f.apply_index(x2);
        state_t y = 0;
        for (int i = 1; i <= n; ++i) {
            const int hi = (fx2 >> (n - i)) & 1;
            const int lo = (x2 >> (n - i)) & 1;
            y = lifted.with_digit(y, i, 2 * hi + lo);
        }
        return y;
    });
}

Network lift_q3(const Network& f) {
    if (f.q() != 2) throw std::invalid_argument("lift_q3 expects a Boolean network");
    const int n = f.n();
    for (int i = 1; i <= n; ++i)
        if (support(f, i).contains(i))
            throw std::invalid_argument("lift_q3 requires that f_" + std::to_string(i) +
                                        " does not depend on x_" + std::to_string(i));
    const Network lifted = Network::identity(3, n);
    return Network::build(3, n, [&](state_t x) {
        state_t hat = 0;  // hat(x)_i = floor(x_i / 2)
        for (int i = 1; i <= n; ++i)
            hat |= static_cast<state_t>(lifted.digit(x, i) / 2) << (n - i);
        const state_t fhat = f.apply_index(hat);
        state_t y = 0;
        for (int i = 1; i <= n; ++i) {
            const int xi = lifted.digit(x, i);
            y = lifted.with_digit(y, i, xi == 2 ? 2 : ((fhat >> (n - i)) & 1));
        }
        return y;
    });
}

}  // namespace autonet
