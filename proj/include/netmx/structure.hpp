#pragma once

#include "netmx/graph.hpp"
#include "netmx/matrix.hpp"

namespace netmx {

/// Static matrices of a network: adjacency, hop distance, external
/// (distance minus adjacency) and their binarizations.
struct StructureBundle
{
    BinaryMatrix A;
    CountMatrix P;
    BinaryMatrix Phat;
    CountMatrix E;
    BinaryMatrix Ehat;
};

BinaryMatrix build_adjacency(const Graph& g);

/// All-pairs hop distances by Floyd-Warshall. Unreachable cells are INF and
/// the diagonal is 0 even when a cycle passes back through the node.
CountMatrix distance_matrix(const BinaryMatrix& a);

/// P - A. Nonzero finite cells mark pairs reachable only through an
/// intermediate node.
CountMatrix external_matrix(const CountMatrix& p, const BinaryMatrix& a);

StructureBundle build_structure(const Graph& g);

} // namespace netmx
