#include "doctest.h"

#include "oracles.hpp"

#include "netmx/generators.hpp"

#include <set>

using namespace netmx;

TEST_CASE("Rng draws are reproducible and bounded")
{
    Rng a(42), b(42), c(43);
    std::vector<std::uint64_t> xa, xb, xc;
    for (int k = 0; k < 100; ++k) {
        xa.push_back(a.below(10));
        xb.push_back(b.below(10));
        xc.push_back(c.below(10));
    }
    CHECK(xa == xb);
    CHECK(xa != xc);
    for (auto x : xa)
        CHECK(x < 10);

    Rng r(7);
    for (int k = 0; k < 1000; ++k) {
        const double u = r.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(Rng(1).below(1) == 0);

    // mt19937_64's 10000th output is fixed by the standard.
    Rng std_check(5489);
    std::uint64_t last = 0;
    for (int k = 0; k < 10000; ++k)
        last = std_check.next();
    CHECK(last == 9981545732273789042ULL);
}

TEST_CASE("derive_seed separates streams")
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t k = 0; k < 1000; ++k)
        seen.insert(derive_seed(5, k));
    CHECK(seen.size() == 1000);
    CHECK(derive_seed(5, 3) == derive_seed(5, 3));
    CHECK(derive_seed(5, 3) != derive_seed(6, 3));
}

TEST_CASE("GenConfig validation")
{
    GenConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.n = 0;
    cfg.max_len = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = GenConfig{};
    cfg.edge_prob = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.edge_prob = -0.1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = GenConfig{};
    cfg.max_len = cfg.n + 1;
    CHECK_THROWS_AS(gen_dataset(cfg), ConfigError);
}

TEST_CASE("gen_digraph")
{
    GenConfig cfg;
    cfg.n = 8;
    cfg.edge_prob = 0.0;
    CHECK(gen_digraph(cfg).edge_count() == 0);
    cfg.edge_prob = 1.0;
    CHECK(gen_digraph(cfg).edge_count() == 8 * 7);
    cfg.edge_prob = 0.5;
    cfg.seed = 11;
    CHECK(gen_digraph(cfg) == gen_digraph(cfg));
    CHECK(gen_digraph(cfg).labels().front() == "v0");
}

TEST_CASE("gen_trajectory")
{
    const Graph g = oracle::chord_graph();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto t = gen_trajectory(g, 4, seed);
        REQUIRE(t);
        CHECK_NOTHROW(validate_trajectory(*t, g));
        CHECK(t->nodes.size() <= 4);
        CHECK(*t == *gen_trajectory(g, 4, seed));
    }
    CHECK_FALSE(gen_trajectory(Graph::with_indexed_labels(3, {}), 3, std::uint64_t{1}));
    CHECK_FALSE(gen_trajectory(g, 1, std::uint64_t{1}));
}

TEST_CASE("gen_dataset is deterministic and valid")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenConfig cfg;
        cfg.n = 2 + seed % 10;
        cfg.edge_prob = 0.3;
        cfg.max_traj = 20;
        cfg.max_len = std::min<std::size_t>(cfg.n, 5);
        cfg.allow_duplicates = seed % 2 == 0;
        cfg.seed = seed;
        const Dataset d = gen_dataset(cfg);
        CHECK(d == gen_dataset(cfg));
        CHECK(d.trajectories().size() <= cfg.max_traj);
        for (const auto& t : d.trajectories())
            CHECK(t.nodes.size() <= cfg.max_len);
        if (!cfg.allow_duplicates) {
            const std::set<Trajectory> unique(d.trajectories().begin(), d.trajectories().end());
            CHECK(unique.size() == d.trajectories().size());
        }
    }

    GenConfig dup;
    dup.n = 5;
    dup.edge_prob = 0.5;
    dup.max_traj = 40;
    dup.allow_duplicates = true;
    bool any_duplicate = false;
    for (dup.seed = 0; dup.seed < 20 && !any_duplicate; ++dup.seed) {
        const Dataset d = gen_dataset(dup);
        const std::set<Trajectory> unique(d.trajectories().begin(), d.trajectories().end());
        any_duplicate = unique.size() < d.trajectories().size();
    }
    CHECK(any_duplicate);
}

TEST_CASE("shortest_path_cover reaches every reachable pair along a shortest path")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GenConfig cfg;
        cfg.n = 2 + seed % 9;
        cfg.edge_prob = 0.3;
        cfg.max_len = 2;
        cfg.seed = seed;
        const Graph g = gen_digraph(cfg);
        const CountMatrix p = oracle::bfs_distances(g);
        const auto cover = shortest_path_cover(g);

        std::size_t reachable = 0;
        for (NodeId i = 0; i < g.n(); ++i)
            for (NodeId j = 0; j < g.n(); ++j)
                reachable += i != j && p(i, j).is_finite();
        CHECK(cover.size() == reachable);
        for (const auto& t : cover) {
            CHECK_NOTHROW(validate_trajectory(t, g));
            CHECK(p(t.nodes.front(), t.nodes.back()) == ExtendedCount(t.nodes.size() - 1));
        }
    }
}

TEST_CASE("gen_fully_utilized and gen_with_uncovered_edge")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        GenConfig cfg;
        cfg.n = 2 + seed % 9;
        cfg.edge_prob = 0.35;
        cfg.max_traj = 10;
        cfg.max_len = std::min<std::size_t>(cfg.n, 4);
        cfg.seed = seed;

        const Dataset full = gen_fully_utilized(cfg);
        const StructureBundle fs = build_structure(full.graph());
        const UtilizationBundle fu = build_utilization(full, fs);
        CHECK(is_fully_utilized(fu, fs));
        CHECK(fu.Fhat == fs.A);
        CHECK(fu.Dhat == fs.Phat);

        const Dataset gap = gen_with_uncovered_edge(cfg);
        const StructureBundle gs = build_structure(gap.graph());
        const UtilizationBundle gu = build_utilization(gap, gs);
        CHECK_FALSE(is_fully_utilized(gu, gs));
        CHECK(gs.A.count_ones() == gu.Fhat.count_ones() + 1);
        CHECK(gap == gen_with_uncovered_edge(cfg));
    }

    GenConfig one;
    one.n = 1;
    one.max_len = 1;
    CHECK_THROWS_AS(gen_with_uncovered_edge(one), ConfigError);
}
