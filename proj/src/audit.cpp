#include "netmx/audit.hpp"

#include "netmx/error.hpp"

#include <algorithm>

namespace netmx {

std::string_view assessment_name(Assessment a)
{
    switch (a) {
    case Assessment::Ok:
        return "OK";
    case Assessment::Violated:
        return "VIOLATED";
    case Assessment::FailsFullyUtilized:
        return "FAILS_FULLY_UTILIZED";
    case Assessment::NotApplicable:
        return "NOT_APPLICABLE";
    case Assessment::ClaimHolds:
        return "CLAIM_HOLDS";
    case Assessment::ClaimFalsified:
        return "CLAIM_FALSIFIED";
    case Assessment::Falsified:
        return "FALSIFIED";
    case Assessment::HoldsHere:
        return "HOLDS_HERE";
    }
    return "?";
}

Assessment assess(const IdentityVerdict& v, bool fully_utilized)
{
    switch (v.cls) {
    case IdentityClass::Universal:
    case IdentityClass::MutualExclusivity:
        return v.holds ? Assessment::Ok : Assessment::Violated;
    case IdentityClass::FullyUtilizedOnly:
        if (!fully_utilized)
            return Assessment::NotApplicable;
        return v.holds ? Assessment::Ok : Assessment::FailsFullyUtilized;
    case IdentityClass::ClaimedAudit:
        return v.holds ? Assessment::ClaimHolds : Assessment::ClaimFalsified;
    case IdentityClass::Negative:
        return v.holds ? Assessment::HoldsHere : Assessment::Falsified;
    }
    return Assessment::Violated;
}

bool AuditReport::sound() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [&](const IdentityVerdict& v) {
        return assess(v, fully_utilized) != Assessment::Violated;
    });
}

const IdentityVerdict& AuditReport::verdict(std::string_view id) const
{
    const auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const IdentityVerdict& v) { return v.id == id; });
    if (it == verdicts.end())
        throw UnknownIdentity(std::string(id));
    return *it;
}

AuditReport audit_dataset(const Dataset& d, std::span<const IdentitySpec> catalogue, std::string name)
{
    const StructureBundle s = build_structure(d.graph());
    const UtilizationBundle u = build_utilization(d, s);

    AuditReport report;
    report.dataset = DatasetDescriptor{std::move(name), d.graph().n(), d.graph().edge_count(), d.trajectories().size()};
    report.fully_utilized = is_fully_utilized(u, s);
    report.verdicts.reserve(catalogue.size());
    for (const auto& spec : catalogue)
        report.verdicts.push_back(evaluate_identity(spec, s, u));
    return report;
}

GenConfig search_instance_config(const SearchOptions& opts, std::size_t k)
{
    const std::size_t max_nodes = std::max<std::size_t>(opts.max_nodes, 2);
    Rng rng(derive_seed(opts.seed, k));

    GenConfig cfg;
    cfg.n = 2 + static_cast<std::size_t>(rng.below(max_nodes - 1));
    cfg.edge_prob = 0.15 + 0.6 * rng.unit();
    cfg.max_traj = static_cast<std::size_t>(rng.below(opts.max_trajectories + 1));
    cfg.max_len = 2 + static_cast<std::size_t>(rng.below(cfg.n - 1));
    cfg.allow_duplicates = opts.allow_duplicates;
    cfg.seed = rng.next();
    return cfg;
}

namespace {

Dataset drop_node(const Dataset& d, NodeId gone)
{
    const Graph& g = d.graph();
    auto remap = [gone](NodeId v) { return v > gone ? v - 1 : v; };

    std::vector<std::string> labels;
    for (NodeId v = 0; v < g.n(); ++v)
        if (v != gone)
            labels.push_back(g.label(v));
    std::vector<Edge> edges;
    for (const auto& [s, t] : g.edges())
        edges.emplace_back(remap(s), remap(t));
    std::vector<Trajectory> trajs = d.trajectories();
    for (auto& t : trajs)
        for (auto& v : t.nodes)
            v = remap(v);
    return Dataset(Graph(std::move(labels), std::move(edges)), std::move(trajs));
}

bool edge_in_use(const Dataset& d, const Edge& e)
{
    for (const auto& t : d.trajectories())
        for (std::size_t k = 0; k + 1 < t.nodes.size(); ++k)
            if (t.nodes[k] == e.first && t.nodes[k + 1] == e.second)
                return true;
    return false;
}

bool node_in_use(const Dataset& d, NodeId v)
{
    for (const auto& [s, t] : d.graph().edges())
        if (s == v || t == v)
            return true;
    for (const auto& t : d.trajectories())
        if (std::find(t.nodes.begin(), t.nodes.end(), v) != t.nodes.end())
            return true;
    return false;
}

} // namespace

Dataset minimize(const Dataset& d, const std::function<bool(const Dataset&)>& falsified)
{
    Dataset cur = d;
    bool changed = true;
    while (changed) {
        changed = false;

        for (std::size_t k = 0; k < cur.trajectories().size();) {
            std::vector<Trajectory> fewer = cur.trajectories();
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
            Dataset candidate(cur.graph(), std::move(fewer));
            if (falsified(candidate)) {
                cur = std::move(candidate);
                changed = true;
            } else {
                ++k;
            }
        }

        for (std::size_t k = 0; k < cur.graph().edge_count();) {
            const Edge e = cur.graph().edges()[k];
            if (!edge_in_use(cur, e)) {
                Dataset candidate(cur.graph().without_edge(e), cur.trajectories());
                if (falsified(candidate)) {
                    cur = std::move(candidate);
                    changed = true;
                    continue;
                }
            }
            ++k;
        }

        for (NodeId v = 0; v < cur.graph().n() && cur.graph().n() > 1;) {
            if (!node_in_use(cur, v)) {
                Dataset candidate = drop_node(cur, v);
                if (falsified(candidate)) {
                    cur = std::move(candidate);
                    changed = true;
                    continue;
                }
            }
            ++v;
        }
    }
    return cur;
}

std::optional<Counterexample> search_counterexample(const IdentitySpec& spec, const SearchOptions& opts)
{
    auto falsified = [&](const Dataset& d) {
        const StructureBundle s = build_structure(d.graph());
        const UtilizationBundle u = build_utilization(d, s);
        // A conditional identity is only falsified where its condition holds.
        if (spec.cls == IdentityClass::FullyUtilizedOnly && !is_fully_utilized(u, s))
            return false;
        return !evaluate_identity(spec, s, u).holds;
    };

    for (std::size_t k = 0; k < opts.budget; ++k) {
        const Dataset d = gen_dataset(search_instance_config(opts, k));
        if (!falsified(d))
            continue;

        Dataset small = minimize(d, falsified);
        const StructureBundle s = build_structure(small.graph());
        const UtilizationBundle u = build_utilization(small, s);
        IdentityVerdict v = evaluate_identity(spec, s, u);
        return Counterexample{std::move(small), std::move(v), k};
    }
    return std::nullopt;
}

} // namespace netmx
