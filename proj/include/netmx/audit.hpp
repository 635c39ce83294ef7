#pragma once

#include "netmx/catalogue.hpp"
#include "netmx/generators.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netmx {

struct DatasetDescriptor
{
    std::string name;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t trajectories = 0;
};

/// How a verdict reads once the identity's class and the dataset's
/// utilization are taken into account.
enum class Assessment
{
    Ok,                   // holds, as required
    Violated,             // UNIVERSAL / MUTUAL_EXCLUSIVITY failure
    FailsFullyUtilized,   // conditional identity fails on a fully utilized dataset
    NotApplicable,        // conditional identity on a dataset that is not fully utilized
    ClaimHolds,
    ClaimFalsified,
    Falsified,            // negative identity fails, as expected somewhere
    HoldsHere,            // negative identity happens to hold on this dataset
};

std::string_view assessment_name(Assessment a);

Assessment assess(const IdentityVerdict& v, bool fully_utilized);

struct AuditReport
{
    DatasetDescriptor dataset;
    bool fully_utilized = false;
    std::vector<IdentityVerdict> verdicts;

    /// Every UNIVERSAL and MUTUAL_EXCLUSIVITY verdict holds.
    bool sound() const;

    const IdentityVerdict& verdict(std::string_view id) const;
};

AuditReport audit_dataset(const Dataset& d, std::span<const IdentitySpec> catalogue = list_identities(),
                          std::string name = {});

struct SearchOptions
{
    std::size_t budget = 1000;
    std::uint64_t seed = 0;
    bool allow_duplicates = true;
    std::size_t max_nodes = 8;
    std::size_t max_trajectories = 12;
};

struct Counterexample
{
    Dataset dataset;           // minimized
    IdentityVerdict verdict;   // on the minimized dataset
    std::size_t instance = 0;  // index of the first falsifying instance
};

/// Config of the k-th random instance of a search.
GenConfig search_instance_config(const SearchOptions& opts, std::size_t k);

/// Greedily drops trajectories, then edges no trajectory uses, then nodes
/// with no edges, keeping each removal only while `falsified` stays true.
/// Repeats until nothing more can be removed.
Dataset minimize(const Dataset& d, const std::function<bool(const Dataset&)>& falsified);

/// Tries up to opts.budget seeded random datasets. Deterministic for fixed
/// (spec, opts).
std::optional<Counterexample> search_counterexample(const IdentitySpec& spec, const SearchOptions& opts);

} // namespace netmx
