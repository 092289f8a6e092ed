#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "mpcx/generators.hpp"
#include "mpcx/graph_io.hpp"
#include "mpcx/influence.hpp"

using namespace mpcx;

namespace {

// Brute-force cycle oracle: try every node subset and every arrangement.
std::vector<Cycle> cycles_by_bruteforce(const Graph& g, std::int64_t max_len) {
    std::vector<Cycle> out;
    const std::int64_t n = g.node_count();
    std::vector<NodeId> subset;

    auto arrangements = [&](const std::vector<NodeId>& nodes) {
        // first element fixed to the minimum; mirror killed via second < last
        std::vector<NodeId> rest(nodes.begin() + 1, nodes.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (rest.size() > 1 && rest.front() > rest.back()) continue;
            std::vector<NodeId> cyc{nodes[0]};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            bool ok = true;
            for (std::size_t i = 0; ok && i < cyc.size(); ++i)
                ok = g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
            if (ok) out.push_back(canonical_cycle(cyc));
        } while (std::next_permutation(rest.begin(), rest.end()));
    };

    auto pick = [&](auto&& self, NodeId from, std::int64_t want) -> void {
        if (want == 0) {
            std::vector<NodeId> nodes(subset);
            std::sort(nodes.begin(), nodes.end());
            arrangements(nodes);
            return;
        }
        for (NodeId v = from; v < n; ++v) {
            subset.push_back(v);
            self(self, v + 1, want - 1);
            subset.pop_back();
        }
    };
    for (std::int64_t k = 3; k <= std::min(max_len, n); ++k) pick(pick, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

Graph two_triangles() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    return g;
}

} // namespace

TEST_CASE("graph invariants") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 1), Error);
    CHECK_THROWS_AS(g.add_edge(1, 0), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.feature(2) == Feature{0});
}

TEST_CASE("random regular: K4 is forced") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        Graph g = gen_random_regular(4, 3, seed);
        CHECK(g.edge_count() == 6);
        for (NodeId v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    }
}

TEST_CASE("random regular: odd stub count rejected") {
    CHECK_THROWS_AS(gen_random_regular(5, 3, 1), Error);
    try {
        gen_random_regular(5, 3, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidParameters);
    }
    CHECK_THROWS_AS(gen_random_regular(4, 4, 1), Error);
}

TEST_CASE("random regular: degrees and determinism") {
    Graph g = gen_random_regular(50, 3, 7);
    std::int64_t lo = 50, hi = 0;
    for (NodeId v = 0; v < 50; ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    CHECK(lo == 3);
    CHECK(hi == 3);
    CHECK(gen_random_regular(50, 3, 7) == g);
    CHECK_FALSE(gen_random_regular(50, 3, 8) == g);
}

TEST_CASE("erdos-renyi: degenerate probabilities") {
    CHECK(gen_erdos_renyi(10, 0.0, 3).edge_count() == 0);
    CHECK(gen_erdos_renyi(10, 1.0, 3).edge_count() == 45);
    CHECK_THROWS_AS(gen_erdos_renyi(10, 1.5, 3), Error);
    CHECK_THROWS_AS(gen_erdos_renyi(10, -0.1, 3), Error);
}

TEST_CASE("erdos-renyi: edge count near its binomial mean") {
    // C(50,2)*0.06 = 73.5, sd = sqrt(73.5*0.94) ~ 8.3; allow 4 sd
    Graph g = gen_erdos_renyi(50, 0.06, 1);
    CHECK(g.edge_count() > 73.5 - 4 * 8.32);
    CHECK(g.edge_count() < 73.5 + 4 * 8.32);
    CHECK(gen_erdos_renyi(50, 0.06, 1) == g);
}

TEST_CASE("cycle canonical form") {
    Cycle c = canonical_cycle({4, 2, 7, 5});
    CHECK(c.nodes == std::vector<NodeId>{2, 4, 5, 7});
    // rotation + reflection invariance
    CHECK(canonical_cycle({7, 5, 4, 2}) == c);
    CHECK(canonical_cycle({5, 7, 2, 4}) == c);
}

TEST_CASE("enumerate_cycles: fixtures") {
    Graph tri = gen_cycle_graph(3);
    auto cycles = enumerate_cycles(tri, 6);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].nodes == std::vector<NodeId>{0, 1, 2});

    Graph tree = gen_path_graph(6);
    CHECK(enumerate_cycles(tree, 6).empty());

    // K4: 4 triangles + 3 quadrilaterals
    CHECK(enumerate_cycles(gen_complete_graph(4), 4).size() == 7);
    CHECK(enumerate_cycles(gen_complete_graph(4), 3).size() == 4);
}

TEST_CASE("enumerate_cycles agrees with brute force on small random graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = gen_erdos_renyi(8, 0.4, seed);
        for (std::int64_t max_len : {3, 5, 8})
            CHECK(enumerate_cycles(g, max_len) == cycles_by_bruteforce(g, max_len));
    }
}

TEST_CASE("shortest paths") {
    Graph p3 = gen_path_graph(3);
    CHECK(shortest_path(p3, 0, 2) == 2);
    CHECK(shortest_path(p3, 1, 1) == 0);
    CHECK_FALSE(shortest_path(two_triangles(), 0, 4).has_value());
    CHECK_THROWS_AS(shortest_path(p3, 0, 9), Error);
}

TEST_CASE("influence survival probabilities") {
    Graph p2 = gen_path_graph(2);
    InfluenceModel infl = influence_matrix(p2);
    CHECK(survival(p2, infl, 0, 1) == doctest::Approx(0.5));
    CHECK(survival(p2, infl, 1, 1) == doctest::Approx(0.5));

    Graph lonely(1);
    CHECK(influence_matrix(lonely).recv_prob(0) == doctest::Approx(1.0));

    Graph tri = gen_cycle_graph(3);
    InfluenceModel ti = influence_matrix(tri);
    for (NodeId b = 0; b < 3; ++b)
        for (NodeId a = 0; a < 3; ++a) CHECK(survival(tri, ti, a, b) == doctest::Approx(1.0 / 3));

    CHECK_THROWS_AS(survival(p2, infl, 0, 0xbad), Error);
}

TEST_CASE("influence rows are stochastic") {
    Graph g = gen_erdos_renyi(30, 0.2, 5);
    InfluenceModel infl = influence_matrix(g);
    for (NodeId b = 0; b < g.node_count(); ++b) {
        const double sum = static_cast<double>(g.degree(b) + 1) * infl.recv_prob(b);
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("walk probability: identity, hand value, stochastic rows") {
    Graph p3 = gen_path_graph(3);
    auto w0 = walk_probability(p3, 0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(w0[i][j] == doctest::Approx(i == j ? 1.0 : 0.0));

    // 2 -> 1 with prob 1/2, then 1 -> 0 with prob 1/3
    auto w2 = walk_probability(p3, 2);
    CHECK(w2[2][0] == doctest::Approx(1.0 / 6));

    Graph g = gen_random_regular(20, 3, 9);
    auto w5 = walk_probability(g, 5);
    for (const auto& row : w5) {
        double sum = 0;
        for (double x : row) sum += x;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("walk probability composes multiplicatively") {
    Graph g = gen_erdos_renyi(12, 0.3, 11);
    const auto a = walk_probability(g, 2);
    const auto b = walk_probability(g, 3);
    const auto ab = walk_probability(g, 5);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            double dot = 0;
            for (std::size_t k = 0; k < a.size(); ++k) dot += a[i][k] * b[k][j];
            CHECK(std::abs(dot - ab[i][j]) <= 1e-10);
        }
}

TEST_CASE("planted ring: forced and impossible instances") {
    // the 6-cycle is the only 2-regular graph on 6 nodes without shorter cycles
    PlantedRing planted = gen_planted_ring(6, 2, 6, 3);
    CHECK(planted.cycle.length() == 6);
    CHECK(planted.cycle.contains(planted.v));
    CHECK(planted.graph.edge_count() == 6);
    for (NodeId v = 0; v < 6; ++v) CHECK(planted.graph.feature(v) == Feature{v + 1});

    // K4 has girth 3; a 6-ring condition can never be met
    CHECK_THROWS_AS(gen_planted_ring(4, 3, 6, 1, 50), Error);
    try {
        gen_planted_ring(4, 3, 6, 1, 50);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GenerationExhausted);
    }
}

TEST_CASE("planted ring: ball oracle on a 3-regular instance") {
    PlantedRing planted = gen_planted_ring(50, 3, 6, 3);
    const Graph& g = planted.graph;
    CHECK(planted.cycle.length() == 6);
    CHECK(planted.cycle.contains(planted.v));

    // independent re-check: cycles of length <= 6 whose nodes all lie in the
    // 3-hop ball of v — exactly the planted one
    const auto dist = bfs_distances(g, planted.v);
    std::size_t in_ball = 0;
    for (const Cycle& c : enumerate_cycles(g, 6)) {
        bool inside = true;
        for (NodeId w : c.nodes) inside = inside && dist[static_cast<std::size_t>(w)] >= 0 &&
                                          dist[static_cast<std::size_t>(w)] <= 3;
        if (inside) {
            ++in_ball;
            CHECK(c == planted.cycle);
        }
    }
    CHECK(in_ball == 1);
}

TEST_CASE("graph file round trip") {
    const std::string path = (std::filesystem::temp_directory_path() / "mpcx_k4.json").string();
    Graph k4 = gen_complete_graph(4);
    k4.set_feature(2, Feature{5, 6});
    save_graph(k4, path);
    CHECK(load_graph(path) == k4);
    std::filesystem::remove(path);
}

TEST_CASE("graph file validation") {
    const auto dir = std::filesystem::temp_directory_path();
    auto write = [&](const std::string& name, const std::string& body) {
        const std::string path = (dir / name).string();
        std::ofstream out(path);
        out << body;
        return path;
    };
    auto expect_parse_error = [](const std::string& path) {
        try {
            load_graph(path);
            FAIL("expected ParseError for " << path);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
        std::filesystem::remove(path);
    };

    expect_parse_error(write("self.json",
                             R"({"n":2,"edges":[[0,0]],"features":[[0],[0]]})"));
    expect_parse_error(write("range.json",
                             R"({"n":2,"edges":[[0,2]],"features":[[0],[0]]})"));
    expect_parse_error(write("dup.json",
                             R"({"n":3,"edges":[[0,1],[0,1]],"features":[[0],[0],[0]]})"));
    expect_parse_error(write("order.json",
                             R"({"n":3,"edges":[[1,0]],"features":[[0],[0],[0]]})"));
    expect_parse_error(write("feat.json", R"({"n":2,"edges":[],"features":[[0]]})"));
    expect_parse_error(write("unknown.json",
                             R"({"n":1,"edges":[],"features":[[0]],"color":"red"})"));
    expect_parse_error(write("junk.json", "not json"));

    CHECK_THROWS_AS(load_graph((dir / "mpcx_missing_file.json").string()), Error);
}

TEST_CASE("dataset loading picks up targets") {
    const auto dir = std::filesystem::temp_directory_path() / "mpcx_ds";
    std::filesystem::create_directories(dir);
    save_graph(gen_cycle_graph(3), (dir / "a.json").string());
    {
        std::ofstream out(dir / "b.json");
        out << R"({"n":2,"edges":[[0,1]],"features":[[0],[0]],"targets":[7,7]})";
    }
    Dataset ds = load_dataset(dir.string());
    REQUIRE(ds.size() == 2);
    CHECK_FALSE(ds.targets[0].has_value());
    REQUIRE(ds.targets[1].has_value());
    CHECK((*ds.targets[1])[0] == 7);
    std::filesystem::remove_all(dir);
}
