#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netmx {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;

/// Directed simple graph with labelled nodes.
///
/// Construction rejects self-loops, duplicate edges, out-of-range indices,
/// and repeated labels. Edges are kept sorted.
class Graph
{
public:
    Graph(std::vector<std::string> labels, std::vector<Edge> edges);

    /// Nodes labelled "v0".."v{n-1}".
    static Graph with_indexed_labels(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(NodeId v) const { return labels_.at(v); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool has_edge(NodeId src, NodeId dst) const noexcept;
    const std::vector<NodeId>& successors(NodeId v) const { return out_.at(v); }

    std::optional<NodeId> index_of(std::string_view label) const;

    /// Same nodes with one edge dropped.
    Graph without_edge(const Edge& e) const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> out_;
    std::unordered_map<std::string, NodeId> index_;
};

} // namespace netmx
