#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpcx/bounds.hpp"
#include "mpcx/exact.hpp"
#include "mpcx/generators.hpp"
#include "mpcx/mpc.hpp"

using namespace mpcx;

namespace {

const Bound& pick(const std::vector<Bound>& bounds, Provenance prov) {
    for (const Bound& b : bounds)
        if (b.provenance == prov) return b;
    REQUIRE(false);
    return bounds.front();
}

} // namespace

TEST_CASE("retain bound fixtures") {
    MPGraph lonely = transform(Graph(1), Arch::standard());
    CHECK(bound_retain(lonely, mp_influence(lonely), 9).value.nats == 0.0);

    MPGraph p2 = transform(gen_path_graph(2), Arch::standard());
    InfluenceModel infl = mp_influence(p2);
    const Bound one = bound_retain(p2, infl, 1);
    CHECK(one.direction == BoundDirection::Lower);
    CHECK(one.value.nats == doctest::Approx(std::log(16.0 / 15.0)));
    // linear in L
    const Bound six = bound_retain(p2, infl, 6);
    CHECK(six.value.nats == doctest::Approx(6.0 * one.value.nats));

    // MLP: every self channel is certain, bound collapses to zero
    MPGraph mlp = transform(gen_random_regular(10, 3, 1), Arch::mlp());
    CHECK(bound_retain(mlp, mp_influence(mlp), 5).value.nats == 0.0);
}

TEST_CASE("retain bound lower-bounds the exact complexity") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = gen_random_regular(6, 3, seed);
        MPGraph mpg = transform(g, Arch::standard());
        InfluenceModel infl = mp_influence(mpg);
        for (std::int64_t L = 1; L <= 2; ++L) {
            const Bound b = bound_retain(mpg, infl, L);
            const ExactMpc exact = exact_mpc(g, Arch::standard(), TaskSpec::retain(0), L, 200);
            REQUIRE_FALSE(exact.mpc.infinite);
            CHECK(b.value.nats <= exact.mpc.nats + 1e-12);
        }
    }
}

TEST_CASE("transfer bounds") {
    const auto vn = bound_transfer(ArchKind::VirtualNode, 50, 3, 5);
    CHECK(pick(vn, Provenance::PaperStated).value.nats == doctest::Approx(std::log(250.0)));
    CHECK(pick(vn, Provenance::LiftAudited).value.nats == doctest::Approx(std::log(255.0)));
    bool has_2logn = false;
    for (const Bound& b : vn) {
        CHECK(b.direction == BoundDirection::Upper);
        if (std::abs(b.value.nats - 2 * std::log(50.0)) < 1e-9) has_2logn = true;
    }
    CHECK(has_2logn);

    const auto std5 = bound_transfer(ArchKind::Standard, 50, 3, 5);
    CHECK(pick(std5, Provenance::PaperStated).value.nats == doctest::Approx(5 * std::log(3.0)));
    CHECK(pick(std5, Provenance::LiftAudited).value.nats == doctest::Approx(5 * std::log(4.0)));
    CHECK(pick(std5, Provenance::PaperStated).direction == BoundDirection::Lower);

    const auto mlp = bound_transfer(ArchKind::Mlp, 50, 3, 1);
    CHECK(mlp[0].value.infinite);
    CHECK(bound_transfer(ArchKind::Mlp, 50, 3, 0)[0].value.nats == 0.0);

    // the virtual-node bound does not move with D
    for (std::int64_t D : {2, 3, 7})
        CHECK(pick(bound_transfer(ArchKind::VirtualNode, 50, 3, D), Provenance::PaperStated)
                  .value.nats == doctest::Approx(std::log(250.0)));

    CHECK_THROWS_AS(bound_transfer(ArchKind::Standard, 1, 3, 5), Error);
    CHECK_THROWS_AS(bound_transfer(ArchKind::Standard, 50, 0, 5), Error);
    CHECK_THROWS_AS(bound_transfer(ArchKind::Standard, 50, 3, -1), Error);
}

TEST_CASE("ring bounds") {
    const auto gsn = bound_ring(ArchKind::Gsn, 6, 4);
    CHECK(pick(gsn, Provenance::PaperStated).value.nats == doctest::Approx(3 * std::log(5.0)));

    const auto std_ring = bound_ring(ArchKind::Standard, 6, 4);
    CHECK(pick(std_ring, Provenance::PaperStated).value.nats == doctest::Approx(6 * std::log(4.0)));
    CHECK(pick(std_ring, Provenance::LiftAudited).value.nats == doctest::Approx(6 * std::log(5.0)));
    CHECK(pick(std_ring, Provenance::PaperStated).direction == BoundDirection::Lower);

    const auto frag = bound_ring(ArchKind::FragNet, 6, 4);
    CHECK(pick(frag, Provenance::PaperStated).value.nats == doctest::Approx(std::log(36.0)));
    CHECK(pick(frag, Provenance::LiftAudited).value.nats == doctest::Approx(std::log(42.0)));

    const auto cin = bound_ring(ArchKind::Cin, 6, 4);
    CHECK(pick(cin, Provenance::PaperStated).value.nats == doctest::Approx(std::log(8.0 * 9.0)));
    CHECK(pick(cin, Provenance::LiftAudited).value.nats == doctest::Approx(std::log(9.0 * 9.0)));

    CHECK_THROWS_AS(bound_ring(ArchKind::Standard, 2, 4), Error);
    CHECK_THROWS_AS(bound_ring(ArchKind::Standard, 6, 1), Error);
}

TEST_CASE("random walk lower bound") {
    Graph p3 = gen_path_graph(3);
    const Bound b = rw_lower_bound(p3, 2, 0, 2);
    CHECK(b.direction == BoundDirection::Lower);
    CHECK(b.value.nats == doctest::Approx(std::log(6.0)));

    CHECK(rw_lower_bound(p3, 1, 0, 2).value.infinite); // d > L
    CHECK(rw_lower_bound(p3, 0, 1, 1).value.nats == 0.0);
}

TEST_CASE("message set bounds") {
    MPGraph p3 = transform(gen_path_graph(3), Arch::standard());
    InfluenceModel infl = mp_influence(p3);

    CHECK(mpc_upper_from_sufficient(p3, infl, {}).value.nats == 0.0);
    CHECK(mpc_lower_from_necessary(p3, infl, {}).value.nats == 0.0);

    // survivals 1/3 (into the middle) and 1/2 (into an end)
    const MessageSet route{{0, 1, 1}, {1, 2, 2}};
    const Bound upper = mpc_upper_from_sufficient(p3, infl, route);
    CHECK(upper.value.nats == doctest::Approx(std::log(6.0)));
    CHECK(upper.direction == BoundDirection::Upper);

    // the unique route is also necessary, and the bound is tight here
    const Bound lower = mpc_lower_from_necessary(p3, infl, route);
    CHECK(lower.value.nats ==
          doctest::Approx(exact_mpc(gen_path_graph(3), Arch::standard(),
                                    TaskSpec::propagate(0, 2), 2)
                              .mpc.nats));

    // a single 1/5 channel: star center of K_{1,4}
    Graph star(5);
    for (NodeId leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    MPGraph slift = transform(star, Arch::standard());
    CHECK(mpc_lower_from_necessary(slift, mp_influence(slift), {{1, 0, 1}}).value.nats ==
          doctest::Approx(std::log(5.0)));

    CHECK_THROWS_AS(mpc_upper_from_sufficient(p3, infl, {{0, 2, 1}}), Error);
    CHECK_THROWS_AS(mpc_upper_from_sufficient(p3, infl, {{0, 1, 0}}), Error);
}

TEST_CASE("message sets respect layer masks") {
    MPGraph mpg = add_readout(transform(gen_path_graph(2), Arch::standard()), 1);
    InfluenceModel infl = mp_influence(mpg);
    CHECK(mpc_upper_from_sufficient(mpg, infl, {{0, 2, 2}}).value.nats ==
          doctest::Approx(std::log(3.0)));
    CHECK_THROWS_AS(mpc_upper_from_sufficient(mpg, infl, {{0, 2, 1}}), Error);
}

TEST_CASE("certified ring sufficient sets on a planted instance") {
    PlantedRing planted = gen_planted_ring(150, 4, 6, 1);
    const NodeId v = planted.v;
    const NodeId u = planted.cycle.shorter_arc(v, planted.cycle.nodes[0] == v
                                                      ? planted.cycle.nodes[3]
                                                      : planted.cycle.nodes[0])
                         .back();

    // antipodal node on the ring: arc distance 3
    NodeId antipodal = v;
    for (NodeId w : planted.cycle.nodes)
        if (planted.cycle.arc_distance(v, w) == 3) antipodal = w;
    REQUIRE(antipodal != v);
    (void)u;

    SUBCASE("fragnet: two messages worth ln 42") {
        MPGraph mpg = transform(planted.graph, Arch::fragnet(6));
        const MessageSet set = sufficient_set_ring(mpg, Arch::fragnet(6), planted.cycle,
                                                   antipodal, v);
        CHECK(set.size() == 2);
        const Bound b = mpc_upper_from_sufficient(mpg, mp_influence(mpg), set);
        CHECK(b.value.nats == doctest::Approx(std::log(42.0)));
    }
    SUBCASE("cin: two messages worth ln 81") {
        MPGraph mpg = transform(planted.graph, Arch::cin(6));
        const MessageSet set =
            sufficient_set_ring(mpg, Arch::cin(6), planted.cycle, antipodal, v);
        CHECK(set.size() == 2);
        const Bound b = mpc_upper_from_sufficient(mpg, mp_influence(mpg), set);
        CHECK(b.value.nats == doctest::Approx(std::log(81.0)));
    }
    SUBCASE("gsn: three messages along the shorter arc") {
        MPGraph mpg = transform(planted.graph, Arch::gsn(6));
        const MessageSet set =
            sufficient_set_ring(mpg, Arch::gsn(6), planted.cycle, antipodal, v);
        CHECK(set.size() == 3);
        const Bound b = mpc_upper_from_sufficient(mpg, mp_influence(mpg), set);
        CHECK(b.value.nats == doctest::Approx(3 * std::log(5.0)));
    }
    SUBCASE("standard is refused") {
        MPGraph mpg = transform(planted.graph, Arch::standard());
        CHECK_THROWS_AS(
            sufficient_set_ring(mpg, Arch::standard(), planted.cycle, antipodal, v), Error);
    }
}
