#pragma once

#include <cmath>
#include <cstdint>

namespace mpcx {

// A complexity value in nats. Infinity is an explicit flag, never a float
// sentinel from log(0).
struct MpcValue {
    double nats = 0.0;
    bool infinite = false;

    static MpcValue finite(double v) { return {v, false}; }
    static MpcValue inf() { return {0.0, true}; }

    static MpcValue from_probability(double p) {
        if (p <= 0.0) return inf();
        return finite(-std::log(p));
    }

    bool operator==(const MpcValue& o) const {
        return infinite == o.infinite && (infinite || nats == o.nats);
    }
};

struct McEstimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double p_hat = 0.0;
    MpcValue mpc;          // -ln(p_hat); infinite iff successes == 0
    double ci_lo = 0.0;    // Wilson 95% interval on p_hat
    double ci_hi = 0.0;
};

} // namespace mpcx
