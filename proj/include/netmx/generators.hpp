#pragma once

#include "netmx/graph.hpp"
#include "netmx/utilization.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace netmx {

/// Seeded generator with portable bounded draws. std::mt19937_64 output is
/// fixed by the standard; the distributions here avoid the
/// implementation-defined std:: ones so output is stable across toolchains.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [0, 1) with 53 bits of precision.
    double unit();

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Derive the seed of the k-th independent sub-stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

struct GenConfig
{
    std::size_t n = 6;
    double edge_prob = 0.4;
    std::size_t max_traj = 10;
    std::size_t max_len = 4;
    bool allow_duplicates = false;
    std::uint64_t seed = 0;

    /// Throws ConfigError unless n >= 1, 0 <= edge_prob <= 1 and max_len <= n.
    void validate() const;

    friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

/// Each ordered pair (i != j) becomes an edge with probability edge_prob.
Graph gen_digraph(const GenConfig& cfg);

/// Random simple path following edges, 2..max_len nodes. Dead ends restart
/// a bounded number of times and the longest attempt is kept. Empty when
/// the graph has no edge or max_len < 2.
std::optional<Trajectory> gen_trajectory(const Graph& g, std::size_t max_len, Rng& rng);
std::optional<Trajectory> gen_trajectory(const Graph& g, std::size_t max_len, std::uint64_t seed);

/// Random graph plus up to max_traj random trajectories. With
/// allow_duplicates some trajectories are deliberate repeats of earlier ones;
/// without it repeats are dropped.
Dataset gen_dataset(const GenConfig& cfg);

/// One shortest-path trajectory (BFS over sorted successor lists) for every
/// ordered pair (i, j) with j reachable from i, in row-major order.
/// Every edge appears as its own two-node trajectory.
std::vector<Trajectory> shortest_path_cover(const Graph& g);

/// Shortest-path cover followed by up to max_traj random extras. Both
/// Fhat = A and Dhat = Phat hold on the result; covering edges alone only
/// gives the first (a pair reachable in two hops may still see no
/// trajectory). The cover ignores max_len.
Dataset gen_fully_utilized(const GenConfig& cfg);

/// Graph with at least one edge where exactly one edge is never traversed:
/// every other edge gets a covering trajectory and the random extras are
/// drawn on the graph without the chosen edge. Requires n >= 2.
Dataset gen_with_uncovered_edge(const GenConfig& cfg);

} // namespace netmx
