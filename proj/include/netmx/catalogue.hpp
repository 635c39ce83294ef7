#pragma once

#include "netmx/expression.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netmx {

enum class IdentityClass
{
    Universal,          // must hold on every dataset
    FullyUtilizedOnly,  // must hold when every edge carries flow
    MutualExclusivity,  // X * Y = 0, must hold on every dataset
    ClaimedAudit,       // stated as general; audited, not assumed
    Negative,           // known to fail on some datasets
};

std::string_view class_name(IdentityClass c);
std::optional<IdentityClass> class_from_name(std::string_view name);

enum class Relation
{
    Equal,
    LessEqual,
};

std::string_view relation_symbol(Relation r);

struct IdentitySpec
{
    std::string id;
    IdentityClass cls;
    Expr lhs;
    Relation relation;
    Expr rhs;
    std::string section; // where the relation is stated
    std::string quote;   // the relation as printed there

    /// "lhs = rhs" / "lhs <= rhs".
    std::string to_string() const;
};

/// The built-in catalogue, in a fixed order.
const std::vector<IdentitySpec>& list_identities();

/// Throws UnknownIdentity.
const IdentitySpec& find_identity(std::string_view id, std::span<const IdentitySpec> catalogue = list_identities());

/// Throws Error if ids repeat or are empty.
void check_catalogue(std::span<const IdentitySpec> catalogue);

/// The operands X, Y of a mutual-exclusivity spec written X * Y = 0.
std::optional<std::pair<Expr, Expr>> exclusive_operands(const IdentitySpec& spec);

struct Witness
{
    Cell cell;
    ExtendedCount lhs;
    ExtendedCount rhs;
};

struct IdentityVerdict
{
    std::string id;
    IdentityClass cls;
    bool holds = true;
    std::optional<Witness> witness; // present iff !holds
};

/// A matrix-core error raised while evaluating one identity.
class IdentityEvaluationError : public Error
{
public:
    IdentityEvaluationError(std::string id, const std::string& what);

    std::string id;
};

/// Evaluates both sides and compares cell by cell (exact integers). The
/// witness is the first offending cell in row-major order.
IdentityVerdict evaluate_identity(const IdentitySpec& spec, const StructureBundle& s, const UtilizationBundle& u);

} // namespace netmx
