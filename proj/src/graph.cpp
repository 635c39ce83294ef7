#include "netmx/graph.hpp"

#include "netmx/error.hpp"

#include <algorithm>

namespace netmx {

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges))
{
    if (labels_.empty())
        throw GraphError("graph must have at least one node");

    for (NodeId v = 0; v < labels_.size(); ++v) {
        if (labels_[v].empty())
            throw GraphError("empty node label");
        if (!index_.emplace(labels_[v], v).second)
            throw GraphError("duplicate node label '" + labels_[v] + "'");
    }

    std::sort(edges_.begin(), edges_.end());
    out_.resize(labels_.size());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto [s, d] = edges_[k];
        if (s >= n() || d >= n())
            throw GraphError("edge endpoint out of range");
        if (s == d)
            throw GraphError("self-loop on node '" + labels_[s] + "'");
        if (k > 0 && edges_[k - 1] == edges_[k])
            throw GraphError("duplicate edge " + labels_[s] + " -> " + labels_[d]);
        out_[s].push_back(d);
    }
}

Graph Graph::with_indexed_labels(std::size_t n, std::vector<Edge> edges)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        labels.push_back("v" + std::to_string(v));
    return Graph(std::move(labels), std::move(edges));
}

bool Graph::has_edge(NodeId src, NodeId dst) const noexcept
{
    return std::binary_search(edges_.begin(), edges_.end(), Edge{src, dst});
}

std::optional<NodeId> Graph::index_of(std::string_view label) const
{
    const auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Graph Graph::without_edge(const Edge& e) const
{
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(kept), [&](const Edge& x) { return x != e; });
    return Graph(labels_, std::move(kept));
}

} // namespace netmx
