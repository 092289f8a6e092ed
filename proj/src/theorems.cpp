#include "mpcx/theorems.hpp"

namespace mpcx {

TriangleReport check_triangle(const Graph& g, const Arch& arch, const TaskSpec& f,
                              const TaskSpec& g_task, std::int64_t layers, std::size_t cap) {
    TaskSpec joint;
    joint.members = f.members;
    joint.members.insert(joint.members.end(), g_task.members.begin(), g_task.members.end());

    TriangleReport report;
    report.p_f = exact_mpc(g, arch, f, layers, cap).p;
    report.p_g = exact_mpc(g, arch, g_task, layers, cap).p;
    report.p_joint = exact_mpc(g, arch, joint, layers, cap).p;
    report.holds = report.p_joint >= report.p_f * report.p_g;
    return report;
}

RefinementReport check_refinement(const Graph& g, const Arch& arch, const TaskSpec& fine,
                                  const TaskSpec& coarse, std::int64_t layers, std::size_t cap) {
    RefinementReport report;
    report.p_fine = exact_mpc(g, arch, fine, layers, cap).p;
    report.p_coarse = exact_mpc(g, arch, coarse, layers, cap).p;
    report.holds = report.p_fine <= report.p_coarse;
    return report;
}

} // namespace mpcx
