#include "doctest.h"

#include "oracles.hpp"

#include "netmx/audit.hpp"

using namespace netmx;
using namespace netmx::oracle;

namespace {

Dataset doubled_chain()
{
    Graph g = labelled_graph({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
    std::vector<Trajectory> ts{path(g, {"A", "B", "C"}), path(g, {"A", "B", "C"})};
    return Dataset(std::move(g), std::move(ts));
}

bool falsifies(const IdentitySpec& spec, const Dataset& d)
{
    const StructureBundle s = build_structure(d.graph());
    return !evaluate_identity(spec, s, build_utilization(d, s)).holds;
}

} // namespace

TEST_CASE("assessment by class")
{
    IdentityVerdict v{"x", IdentityClass::Universal, true, std::nullopt};
    CHECK(assess(v, false) == Assessment::Ok);
    v.holds = false;
    CHECK(assess(v, false) == Assessment::Violated);

    v.cls = IdentityClass::FullyUtilizedOnly;
    CHECK(assess(v, false) == Assessment::NotApplicable);
    CHECK(assess(v, true) == Assessment::FailsFullyUtilized);

    v.cls = IdentityClass::ClaimedAudit;
    CHECK(assess(v, true) == Assessment::ClaimFalsified);
    v.cls = IdentityClass::Negative;
    CHECK(assess(v, true) == Assessment::Falsified);
    v.holds = true;
    CHECK(assess(v, true) == Assessment::HoldsHere);
    CHECK(assessment_name(Assessment::NotApplicable) == "NOT_APPLICABLE");
}

TEST_CASE("audit of the chord graph")
{
    const AuditReport r = audit_dataset(chord_dataset(), list_identities(), "chord");
    CHECK(r.sound());
    CHECK_FALSE(r.fully_utilized);
    CHECK(r.dataset.name == "chord");
    CHECK(r.dataset.nodes == 4);
    CHECK(r.dataset.edges == 4);
    CHECK(r.dataset.trajectories == 1);
    CHECK(r.verdicts.size() == list_identities().size());

    const IdentityVerdict& x = r.verdict("X.EHAT_L_NEQ_L");
    CHECK_FALSE(x.holds);
    REQUIRE(x.witness);
    CHECK(x.witness->cell == Cell{B, D});
    CHECK(assess(r.verdict("FU.FHAT_EQ_A"), r.fully_utilized) == Assessment::NotApplicable);
    CHECK_THROWS_AS(r.verdict("NO_SUCH_ID"), UnknownIdentity);
}

TEST_CASE("count-level claims fail under duplicate trajectories")
{
    const AuditReport r = audit_dataset(doubled_chain());
    CHECK(r.sound());

    const IdentityVerdict& dtc = r.verdict("CLAIMED.D_TC");
    CHECK_FALSE(dtc.holds);
    REQUIRE(dtc.witness);
    CHECK(dtc.witness->cell == Cell{0, 2});
    CHECK(dtc.witness->lhs == ExtendedCount(4));
    CHECK(dtc.witness->rhs == ExtendedCount(2));
    CHECK_FALSE(r.verdict("CLAIMED.L_TC").holds);

    // Hat-left forms are unaffected by multiplicity.
    CHECK(r.verdict("B.DHAT_TC").holds);
    CHECK(r.verdict("B.LHAT_TC").holds);

    // A single copy keeps the claims intact.
    const Dataset single(doubled_chain().graph(), {doubled_chain().trajectories().front()});
    CHECK(audit_dataset(single).verdict("CLAIMED.D_TC").holds);
}

TEST_CASE("edge coverage alone does not give Dhat = Phat")
{
    // Every edge is traversed, but no trajectory goes from A to C.
    Graph g = labelled_graph({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
    std::vector<Trajectory> ts{path(g, {"A", "B"}), path(g, {"B", "C"})};
    const AuditReport r = audit_dataset(Dataset(std::move(g), std::move(ts)));
    CHECK(r.fully_utilized);
    CHECK(r.verdict("FU.FHAT_EQ_A").holds);
    const IdentityVerdict& v = r.verdict("FU.DHAT_EQ_PHAT");
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->cell == Cell{0, 2});
    CHECK(assess(v, r.fully_utilized) == Assessment::FailsFullyUtilized);
    // Conditional failures do not count against soundness.
    CHECK(r.sound());
}

TEST_CASE("minimize shrinks while preserving the failure")
{
    const IdentitySpec& spec = find_identity("CLAIMED.D_TC");
    Graph g = labelled_graph({"A", "B", "C", "D", "E"}, {{"A", "B"}, {"B", "C"}, {"C", "D"}, {"D", "E"}, {"E", "A"}});
    std::vector<Trajectory> ts{path(g, {"A", "B", "C"}), path(g, {"C", "D"}), path(g, {"A", "B", "C"}),
                               path(g, {"D", "E", "A"})};
    const Dataset big(std::move(g), std::move(ts));
    REQUIRE(falsifies(spec, big));

    const Dataset small = minimize(big, [&](const Dataset& d) { return falsifies(spec, d); });
    CHECK(falsifies(spec, small));
    CHECK(small.trajectories().size() == 2);
    CHECK(small.graph().n() == 3);
    CHECK(small.graph().edge_count() == 2);
    CHECK(small.graph().labels() == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("counterexample search")
{
    SearchOptions opts;
    opts.budget = 1000;
    opts.seed = 3;

    const auto x = search_counterexample(find_identity("X.EHAT_L_NEQ_L"), opts);
    REQUIRE(x);
    CHECK_FALSE(x->verdict.holds);
    CHECK(x->instance < opts.budget);
    CHECK(falsifies(find_identity("X.EHAT_L_NEQ_L"), x->dataset));

    CHECK_FALSE(search_counterexample(find_identity("ME.A_EHAT"), opts));

    const auto dtc = search_counterexample(find_identity("CLAIMED.D_TC"), opts);
    REQUIRE(dtc);
    REQUIRE(dtc->verdict.witness);
    const Witness& w = *dtc->verdict.witness;
    CHECK(w.rhs.value() >= 2);
    CHECK(w.lhs.value() == w.rhs.value() * w.rhs.value());

    // Same inputs, same result.
    const auto again = search_counterexample(find_identity("CLAIMED.D_TC"), opts);
    REQUIRE(again);
    CHECK(again->dataset == dtc->dataset);
    CHECK(again->instance == dtc->instance);

    SearchOptions unique = opts;
    unique.allow_duplicates = false;
    unique.budget = 300;
    CHECK(search_instance_config(unique, 7) == search_instance_config(unique, 7));
    CHECK_FALSE(search_instance_config(unique, 7) == search_instance_config(unique, 8));
}

TEST_CASE("conditional identities are only falsified on fully utilized data")
{
    SearchOptions opts;
    opts.budget = 400;
    CHECK_FALSE(search_counterexample(find_identity("FU.FHAT_EQ_A"), opts));
}
