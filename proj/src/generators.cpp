#include "netmx/generators.hpp"

#include "netmx/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace netmx {

std::uint64_t Rng::below(std::uint64_t bound)
{
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = next();
    while (x >= limit)
        x = next();
    return x % bound;
}

double Rng::unit()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k)
{
    // splitmix64 finalizer over (seed, k)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void GenConfig::validate() const
{
    if (n < 1)
        throw ConfigError("n must be at least 1");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw ConfigError("edge_prob must lie in [0, 1]");
    if (max_len > n)
        throw ConfigError("max_len must not exceed n");
}

namespace {

constexpr int path_retries = 8;
constexpr double duplicate_rate = 0.25;

Graph draw_graph(const GenConfig& cfg, Rng& rng)
{
    std::vector<Edge> edges;
    for (NodeId i = 0; i < cfg.n; ++i)
        for (NodeId j = 0; j < cfg.n; ++j)
            if (i != j && rng.bernoulli(cfg.edge_prob))
                edges.emplace_back(i, j);
    return Graph::with_indexed_labels(cfg.n, std::move(edges));
}

/// Appends up to `count` random trajectories drawn on `walk` to `out`.
void draw_trajectories(const Graph& walk, const GenConfig& cfg, std::size_t count, Rng& rng,
                       std::vector<Trajectory>& out)
{
    std::set<Trajectory> seen(out.begin(), out.end());
    for (std::size_t k = 0; k < count; ++k) {
        if (cfg.allow_duplicates && !out.empty() && rng.bernoulli(duplicate_rate)) {
            out.push_back(out[rng.below(out.size())]);
            continue;
        }
        auto t = gen_trajectory(walk, cfg.max_len, rng);
        if (!t)
            break;
        if (!cfg.allow_duplicates && !seen.insert(*t).second)
            continue;
        out.push_back(std::move(*t));
    }
}

} // namespace

Graph gen_digraph(const GenConfig& cfg)
{
    cfg.validate();
    Rng rng(cfg.seed);
    return draw_graph(cfg, rng);
}

std::optional<Trajectory> gen_trajectory(const Graph& g, std::size_t max_len, Rng& rng)
{
    if (max_len < 2)
        return std::nullopt;

    std::vector<NodeId> starts;
    for (NodeId v = 0; v < g.n(); ++v)
        if (!g.successors(v).empty())
            starts.push_back(v);
    if (starts.empty())
        return std::nullopt;

    const std::size_t target = 2 + static_cast<std::size_t>(rng.below(max_len - 1));
    std::vector<NodeId> best;
    std::vector<char> visited(g.n());
    std::vector<NodeId> open;

    for (int attempt = 0; attempt < path_retries; ++attempt) {
        std::fill(visited.begin(), visited.end(), 0);
        std::vector<NodeId> path{starts[rng.below(starts.size())]};
        visited[path.back()] = 1;

        while (path.size() < target) {
            open.clear();
            for (NodeId s : g.successors(path.back()))
                if (!visited[s])
                    open.push_back(s);
            if (open.empty())
                break;
            path.push_back(open[rng.below(open.size())]);
            visited[path.back()] = 1;
        }

        if (path.size() > best.size())
            best = std::move(path);
        if (best.size() >= target)
            break;
    }
    return Trajectory{std::move(best)};
}

std::optional<Trajectory> gen_trajectory(const Graph& g, std::size_t max_len, std::uint64_t seed)
{
    Rng rng(seed);
    return gen_trajectory(g, max_len, rng);
}

Dataset gen_dataset(const GenConfig& cfg)
{
    cfg.validate();
    Rng rng(cfg.seed);
    Graph g = draw_graph(cfg, rng);
    std::vector<Trajectory> trajs;
    draw_trajectories(g, cfg, cfg.max_traj, rng, trajs);
    return Dataset(std::move(g), std::move(trajs));
}

std::vector<Trajectory> shortest_path_cover(const Graph& g)
{
    std::vector<Trajectory> out;
    std::vector<NodeId> parent(g.n());
    std::vector<char> seen(g.n());
    std::vector<NodeId> queue;
    for (NodeId src = 0; src < g.n(); ++src) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.assign(1, src);
        seen[src] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (NodeId next : g.successors(queue[head]))
                if (!seen[next]) {
                    seen[next] = 1;
                    parent[next] = queue[head];
                    queue.push_back(next);
                }

        std::vector<NodeId> dsts(queue.begin() + 1, queue.end());
        std::sort(dsts.begin(), dsts.end());
        for (NodeId dst : dsts) {
            std::vector<NodeId> path{dst};
            while (path.back() != src)
                path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());
            out.push_back(Trajectory{std::move(path)});
        }
    }
    return out;
}

Dataset gen_fully_utilized(const GenConfig& cfg)
{
    cfg.validate();
    Rng rng(cfg.seed);
    Graph g = draw_graph(cfg, rng);
    std::vector<Trajectory> trajs = shortest_path_cover(g);
    draw_trajectories(g, cfg, cfg.max_traj, rng, trajs);
    return Dataset(std::move(g), std::move(trajs));
}

Dataset gen_with_uncovered_edge(const GenConfig& cfg)
{
    cfg.validate();
    if (cfg.n < 2)
        throw ConfigError("an uncovered edge needs n >= 2");

    Rng rng(cfg.seed);
    Graph g = draw_graph(cfg, rng);
    if (g.edge_count() == 0)
        g = Graph::with_indexed_labels(cfg.n, {Edge{0, 1}});

    const Edge skipped = g.edges()[rng.below(g.edge_count())];
    const Graph walk = g.without_edge(skipped);

    std::vector<Trajectory> trajs;
    for (const auto& [s, d] : walk.edges())
        trajs.push_back(Trajectory{{s, d}});
    draw_trajectories(walk, cfg, cfg.max_traj, rng, trajs);
    return Dataset(std::move(g), std::move(trajs));
}

} // namespace netmx
