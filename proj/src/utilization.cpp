#include "netmx/utilization.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace netmx {

TrajectoryError::TrajectoryError(TrajectoryFault f, std::string what, std::optional<Edge> e)
    : Error(std::move(what)), fault(f), edge(e)
{
}

void validate_trajectory(const Trajectory& t, const Graph& g)
{
    const auto& nodes = t.nodes;
    if (nodes.size() < 2)
        throw TrajectoryError(TrajectoryFault::TooShort, "trajectory has fewer than 2 nodes");

    std::unordered_set<NodeId> seen;
    for (NodeId v : nodes) {
        if (v >= g.n())
            throw GraphError("trajectory node index out of range");
        if (!seen.insert(v).second)
            throw TrajectoryError(TrajectoryFault::RepeatedNode, "trajectory revisits node '" + g.label(v) + "'");
    }
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k)
        if (!g.has_edge(nodes[k], nodes[k + 1]))
            throw TrajectoryError(TrajectoryFault::MissingEdge,
                                  "trajectory uses missing edge " + g.label(nodes[k]) + " -> " +
                                      g.label(nodes[k + 1]),
                                  Edge{nodes[k], nodes[k + 1]});
}

Dataset::Dataset(Graph g, std::vector<Trajectory> trajectories)
    : graph_(std::move(g)), trajectories_(std::move(trajectories))
{
    for (std::size_t k = 0; k < trajectories_.size(); ++k) {
        try {
            validate_trajectory(trajectories_[k], graph_);
        } catch (const TrajectoryError& e) {
            throw TrajectoryError(e.fault, "trajectory " + std::to_string(k) + ": " + e.what(), e.edge);
        }
    }
}

namespace {

/// Walk every ordered position pair (p < q) of every trajectory and count
/// into the cell (nodes[p], nodes[q]) when the pair is selected.
template <class Select>
CountMatrix count_pairs(const Dataset& d, Select select)
{
    CountMatrix m(d.graph().n());
    for (const auto& t : d.trajectories())
        for (std::size_t p = 0; p < t.nodes.size(); ++p)
            for (std::size_t q = p + 1; q < t.nodes.size(); ++q)
                if (select(t.nodes[p], t.nodes[q], q - p))
                    m(t.nodes[p], t.nodes[q]) = checked_add(m(t.nodes[p], t.nodes[q]), 1);
    return m;
}

/// Partial sums of the five utilization matrices over a slice of trajectories.
struct Tally
{
    explicit Tally(std::size_t n) : n(n), f(n * n), d(n * n), l(n * n), t(n * n), tc(n * n) {}

    void add(const Trajectory& traj, const BinaryMatrix& adjacency)
    {
        const auto& v = traj.nodes;
        for (std::size_t p = 0; p < v.size(); ++p)
            for (std::size_t q = p + 1; q < v.size(); ++q) {
                const std::size_t cell = v[p] * n + v[q];
                ++d[cell];
                if (q == p + 1) {
                    ++f[cell];
                    continue;
                }
                ++l[cell];
                if (adjacency(v[p], v[q]))
                    ++t[cell];
                else
                    ++tc[cell];
            }
    }

    void merge(const Tally& other)
    {
        auto sum = [](std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
            for (std::size_t k = 0; k < into.size(); ++k)
                if (__builtin_add_overflow(into[k], from[k], &into[k]))
                    throw CountOverflow();
        };
        sum(f, other.f);
        sum(d, other.d);
        sum(l, other.l);
        sum(t, other.t);
        sum(tc, other.tc);
    }

    CountMatrix to_matrix(const std::vector<std::uint64_t>& cells) const
    {
        CountMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = cells[i * n + j];
        return m;
    }

    std::size_t n;
    std::vector<std::uint64_t> f, d, l, t, tc;
};

constexpr std::size_t parallel_threshold = 4096;

Tally fold(const Dataset& ds, const BinaryMatrix& adjacency)
{
    const auto& trajs = ds.trajectories();
    const std::size_t n = ds.graph().n();

    std::size_t workers = 1;
    if (trajs.size() >= parallel_threshold)
        workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);

    std::vector<Tally> partial(workers, Tally(n));
    const std::size_t chunk = (trajs.size() + workers - 1) / workers;
    auto run = [&](std::size_t w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(trajs.size(), lo + chunk);
        for (std::size_t k = lo; k < hi; ++k)
            partial[w].add(trajs[k], adjacency);
    };

    if (workers == 1) {
        run(0);
        return std::move(partial.front());
    }

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
    }
    for (std::size_t w = 1; w < workers; ++w)
        partial.front().merge(partial[w]);
    return std::move(partial.front());
}

void cross_check(const char* identity, const CountMatrix& lhs, const CountMatrix& rhs)
{
    if (auto cell = first_difference(lhs, rhs))
        throw CrossCheckFailure(identity, *cell);
}

} // namespace

CountMatrix flow_matrix(const Dataset& d)
{
    return count_pairs(d, [](NodeId, NodeId, std::size_t gap) { return gap == 1; });
}

CountMatrix od_matrix(const Dataset& d)
{
    return count_pairs(d, [](NodeId, NodeId, std::size_t) { return true; });
}

CountMatrix indirect_flow_matrix(const Dataset& d)
{
    return count_pairs(d, [](NodeId, NodeId, std::size_t gap) { return gap >= 2; });
}

CountMatrix alternative_route_matrix(const Dataset& d, const StructureBundle& s)
{
    if (s.A.n() != d.graph().n())
        throw DimensionMismatch(s.A.n(), d.graph().n());
    return count_pairs(d, [&](NodeId i, NodeId j, std::size_t gap) { return gap >= 2 && s.A(i, j); });
}

CountMatrix substitute_route_matrix(const Dataset& d, const StructureBundle& s)
{
    if (s.A.n() != d.graph().n())
        throw DimensionMismatch(s.A.n(), d.graph().n());
    return count_pairs(d, [&](NodeId i, NodeId j, std::size_t gap) { return gap >= 2 && !s.A(i, j); });
}

CrossCheckFailure::CrossCheckFailure(std::string id, Cell w)
    : Error("cross-check " + id + " failed at cell (" + std::to_string(w.row) + "," + std::to_string(w.col) + ")"),
      identity(std::move(id)), witness(w)
{
}

UtilizationBundle build_utilization(const Dataset& d, const StructureBundle& s)
{
    if (s.A.n() != d.graph().n())
        throw DimensionMismatch(s.A.n(), d.graph().n());

    const Tally tally = fold(d, s.A);
    CountMatrix F = tally.to_matrix(tally.f);
    CountMatrix D = tally.to_matrix(tally.d);
    CountMatrix L = tally.to_matrix(tally.l);
    CountMatrix T = tally.to_matrix(tally.t);
    CountMatrix Tc = tally.to_matrix(tally.tc);

    cross_check("T = A * L", T, hadamard(s.A, L));
    cross_check("Tc = Ehat * D", Tc, hadamard(s.Ehat, D));
    cross_check("L = T + Tc", L, ew_add(T, Tc));
    cross_check("D = F + T + Tc", D, ew_add(F, ew_add(T, Tc)));

    BinaryMatrix Fhat = binarize(F);
    BinaryMatrix Dhat = binarize(D);
    BinaryMatrix Lhat = binarize(L);
    BinaryMatrix That = binarize(T);
    BinaryMatrix Tchat = binarize(Tc);
    return UtilizationBundle{std::move(F),    std::move(D),    std::move(L),    std::move(T),    std::move(Tc),
                             std::move(Fhat), std::move(Dhat), std::move(Lhat), std::move(That), std::move(Tchat)};
}

bool is_fully_utilized(const UtilizationBundle& u, const StructureBundle& s)
{
    return u.Fhat == s.A;
}

} // namespace netmx
