#pragma once

#include "mpcx/mpc.hpp"

namespace mpcx {

// Exact-arithmetic checkers for the compositionality statements; used as
// property-test drivers. Violations are reported, never silently passed.

// P[f and g jointly deducible] >= P[f] * P[g] over one shared coin table,
// i.e. MPC(f || g) <= MPC(f) + MPC(g).
struct TriangleReport {
    Rational p_f, p_g, p_joint;
    bool holds = false;
};
TriangleReport check_triangle(const Graph& g, const Arch& arch, const TaskSpec& f,
                              const TaskSpec& g_task, std::int64_t layers, std::size_t cap = 24);

// A joint task refines each member: P[joint] <= P[member], i.e.
// MPC(joint) >= MPC(member).
struct RefinementReport {
    Rational p_fine, p_coarse;
    bool holds = false;
};
RefinementReport check_refinement(const Graph& g, const Arch& arch, const TaskSpec& fine,
                                  const TaskSpec& coarse, std::int64_t layers,
                                  std::size_t cap = 24);

} // namespace mpcx
