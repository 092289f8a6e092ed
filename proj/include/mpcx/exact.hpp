#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mpcx/sim.hpp"

namespace mpcx {

using Rational = boost::multiprecision::cpp_rational;

struct ExactResult {
    Rational p;           // exact success probability
    std::size_t channels; // relevant message channels that were enumerated
};

// Exact success probability of the lossy process, by dynamic programming
// over the joint per-member active sets. Only channels that can influence
// the outcome are branched on: (a,b,l) such that for some member, a is
// reachable from its sources within l-1 layers and a length L-l
// mask-respecting walk leads from b to one of its targets. Raises
// EnumerationTooLargeError when more than `cap` channels remain.
ExactResult exact_success_prob(const MPGraph& mpg, const InfluenceModel& infl,
                               const std::vector<TaskInstance>& members, std::int64_t layers,
                               std::size_t cap = 24);

MpcValue mpc_from_rational(const Rational& p);
double rational_to_double(const Rational& p);

} // namespace mpcx
