#pragma once

#include "netmx/error.hpp"
#include "netmx/graph.hpp"
#include "netmx/matrix.hpp"
#include "netmx/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netmx {

/// Ordered node sequence of one agent. Valid trajectories have at least two
/// distinct nodes and follow graph edges.
struct Trajectory
{
    std::vector<NodeId> nodes;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
    friend auto operator<=>(const Trajectory&, const Trajectory&) = default;
};

enum class TrajectoryFault
{
    TooShort,
    RepeatedNode,
    MissingEdge,
};

class TrajectoryError : public Error
{
public:
    TrajectoryError(TrajectoryFault fault, std::string what, std::optional<Edge> edge = std::nullopt);

    TrajectoryFault fault;
    std::optional<Edge> edge; // set for MissingEdge
};

/// Throws TrajectoryError if t is not a valid acyclic trajectory on g.
void validate_trajectory(const Trajectory& t, const Graph& g);

/// A graph and a list of trajectories validated against it. Duplicate
/// trajectories are kept; each one counts.
class Dataset
{
public:
    /// Throws TrajectoryError (prefixed with the trajectory index) on the
    /// first invalid trajectory.
    Dataset(Graph g, std::vector<Trajectory> trajectories);

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<Trajectory>& trajectories() const noexcept { return trajectories_; }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    Graph graph_;
    std::vector<Trajectory> trajectories_;
};

struct UtilizationBundle
{
    CountMatrix F;
    CountMatrix D;
    CountMatrix L;
    CountMatrix T;
    CountMatrix Tc;
    BinaryMatrix Fhat;
    BinaryMatrix Dhat;
    BinaryMatrix Lhat;
    BinaryMatrix That;
    BinaryMatrix Tchat;
};

/// f(i,j): trajectories that step directly from i to j.
CountMatrix flow_matrix(const Dataset& d);

/// d(i,j): trajectories visiting i and later j, by any route.
CountMatrix od_matrix(const Dataset& d);

/// l(i,j): trajectories visiting i and later j with at least one node between.
CountMatrix indirect_flow_matrix(const Dataset& d);

/// Indirect flows over pairs that have a direct edge.
CountMatrix alternative_route_matrix(const Dataset& d, const StructureBundle& s);

/// Indirect flows over pairs without a direct edge.
CountMatrix substitute_route_matrix(const Dataset& d, const StructureBundle& s);

/// Raised when the directly counted matrices disagree with their algebraic
/// forms. Indicates an implementation defect, never bad input.
class CrossCheckFailure : public Error
{
public:
    CrossCheckFailure(std::string identity, Cell witness);

    std::string identity;
    Cell witness;
};

/// Counts all five matrices in one pass (split across threads for large
/// inputs), binarizes them and checks T = A*L, Tc = Ehat*D, L = T + Tc and
/// D = F + T + Tc.
UtilizationBundle build_utilization(const Dataset& d, const StructureBundle& s);

/// Every edge carries at least one direct flow.
bool is_fully_utilized(const UtilizationBundle& u, const StructureBundle& s);

} // namespace netmx
