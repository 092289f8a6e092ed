#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpcx/generators.hpp"
#include "mpcx/rng.hpp"
#include "mpcx/theorems.hpp"

using namespace mpcx;

namespace {

TaskSpec random_single_task(std::int64_t n, std::uint64_t seed) {
    const NodeId u = static_cast<NodeId>(splitmix64(seed) % static_cast<std::uint64_t>(n));
    const NodeId v = static_cast<NodeId>(splitmix64(seed + 1) % static_cast<std::uint64_t>(n));
    if (seed % 2 == 0) return TaskSpec::retain(v);
    return TaskSpec::propagate(u, v);
}

// Joint members must share the target; rewrite g's target onto f's.
TaskSpec align_target(TaskSpec task, NodeId v) {
    for (auto& member : task.members)
        std::visit([&](auto& t) { t.v = v; }, member);
    return task;
}

} // namespace

TEST_CASE("triangle: identical tasks are the idempotent case") {
    Graph p3 = gen_path_graph(3);
    const TaskSpec f = TaskSpec::retain(2);
    const TriangleReport r = check_triangle(p3, Arch::standard(), f, f, 2);
    CHECK(r.holds);
    CHECK(r.p_joint == r.p_f); // same coins, same predicate
}

TEST_CASE("triangle: propagate + retain on the 3-path") {
    const TriangleReport r = check_triangle(gen_path_graph(3), Arch::standard(),
                                            TaskSpec::propagate(0, 2), TaskSpec::retain(2), 2);
    CHECK(r.holds);
    CHECK(r.p_f == Rational(1, 6));
    CHECK(r.p_joint >= r.p_f * r.p_g);
}

TEST_CASE("triangle: 100 random enumerable instances, zero violations") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 100; ++seed) {
        Graph g = gen_erdos_renyi(4, 0.5, seed);
        if (g.edge_count() == 0) continue;
        const std::int64_t L = 1 + static_cast<std::int64_t>(seed % 3);
        const TaskSpec f = random_single_task(4, seed * 17 + 3);
        const TaskSpec gt = align_target(random_single_task(4, seed * 31 + 7), f.target_of(0));
        try {
            const TriangleReport r = check_triangle(g, Arch::standard(), f, gt, L, 64);
            CHECK(r.holds);
            ++checked;
        } catch (const EnumerationTooLargeError&) {
        }
    }
}

TEST_CASE("refinement: joint vs member on the 3-path") {
    const TaskSpec joint = TaskSpec::joint({PropagateTask{0, 2}, RetainTask{2}});
    const RefinementReport r =
        check_refinement(gen_path_graph(3), Arch::standard(), joint, TaskSpec::retain(2), 2);
    CHECK(r.holds);
    CHECK(r.p_fine <= r.p_coarse);
}

TEST_CASE("refinement: a task refines itself") {
    const TaskSpec f = TaskSpec::propagate(0, 1);
    const RefinementReport r =
        check_refinement(gen_path_graph(2), Arch::standard(), f, f, 2);
    CHECK(r.holds);
    CHECK(r.p_fine == r.p_coarse);
}

TEST_CASE("refinement: 100 random enumerable instances, zero violations") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 100; ++seed) {
        Graph g = gen_erdos_renyi(4, 0.5, 1000 + seed);
        if (g.edge_count() == 0) continue;
        const std::int64_t L = 1 + static_cast<std::int64_t>(seed % 3);
        const TaskSpec coarse = random_single_task(4, seed * 13 + 1);
        const NodeId v = coarse.target_of(0);
        TaskSpec fine = TaskSpec::joint({coarse.members[0]});
        TaskSpec extra = align_target(random_single_task(4, seed * 29 + 11), v);
        fine.members.push_back(extra.members[0]);
        try {
            const RefinementReport r = check_refinement(g, Arch::standard(), fine, coarse, L, 64);
            CHECK(r.holds);
            ++checked;
        } catch (const EnumerationTooLargeError&) {
        }
    }
}
