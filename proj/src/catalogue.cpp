#include "netmx/catalogue.hpp"

#include "netmx/error.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace netmx {

namespace {

using enum IdentityClass;

constexpr std::array<std::pair<IdentityClass, std::string_view>, 5> class_names{{
    {Universal, "UNIVERSAL"},
    {FullyUtilizedOnly, "FULLY_UTILIZED_ONLY"},
    {MutualExclusivity, "MUTUAL_EXCLUSIVITY"},
    {ClaimedAudit, "CLAIMED_AUDIT"},
    {Negative, "NEGATIVE"},
}};

struct Row
{
    const char* id;
    IdentityClass cls;
    const char* lhs;
    Relation relation;
    const char* rhs;
    const char* section;
    const char* quote;
};

constexpr Relation EQ = Relation::Equal;
constexpr Relation LE = Relation::LessEqual;

// clang-format off
const Row rows[] = {
    // Relations from the earlier model, valid on every instance.
    {"T1.EHAT_FIXED",        Universal, "Ehat",  EQ, "Phat * Ehat",   "IV, Table I", "Ê = P̂ ∘ Ê"},
    {"T1.A_FIXED",           Universal, "A",     EQ, "Phat * A",      "IV, Table I", "A = P̂ ∘ A"},
    {"T1.FHAT_LEQ_A",        Universal, "Fhat",  LE, "A",             "IV, Table I", "F̂ ≤ A"},
    {"T1.F_EQ_AF",           Universal, "F",     EQ, "A * F",         "IV, Table I", "F = A ∘ F"},
    {"T1.DHAT_LEQ_PHAT",     Universal, "Dhat",  LE, "Phat",          "IV, Table I", "D̂ ≤ P̂"},
    {"T1.D_EQ_PHAT_D",       Universal, "D",     EQ, "Phat * D",      "IV, Table I", "D = P̂ ∘ D"},
    {"T1.F_LEQ_D",           Universal, "F",     LE, "D",             "IV, Table I", "F ≤ D"},
    {"T1.FHAT_LEQ_DHAT",     Universal, "Fhat",  LE, "Dhat",          "IV, Table I", "F̂ ≤ D̂"},
    {"T1.T_EQ_AL",           Universal, "T",     EQ, "A * L",         "IV, Table I", "T = A ∘ L"},
    {"T1.THAT_EQ_ALHAT",     Universal, "That",  EQ, "A * Lhat",      "IV, Table I", "T̂ = A ∘ L̂"},
    {"T1.FT_EQ_AD",          Universal, "F + T", EQ, "A * D",         "IV, Table I", "F + T = A ∘ D"},
    {"T1.AD_EQ_D_MINUS_TC",  Universal, "A * D", EQ, "D - Tc",        "IV, Table I", "A ∘ D = D − Tᶜ"},
    {"T1.T_EQ_AD_MINUS_F",   Universal, "T",     EQ, "A * D - F",     "IV, Table I", "T = A ∘ D − F"},
    {"T1.TC_EQ_EHAT_D",      Universal, "Tc",    EQ, "Ehat * D",      "IV, Table I", "Tᶜ = Ê ∘ D"},
    {"T1.L_EQ_T_PLUS_EHAT_D",Universal, "L",     EQ, "T + Ehat * D",  "IV, Table I", "L = T + Ê ∘ D"},
    {"T1.F_EQ_AD_MINUS_T",   Universal, "F",     EQ, "A * D - T",     "IV, Table I", "F = A ∘ D − T"},

    // Zero products.
    {"ME.A_EHAT",            MutualExclusivity, "A * Ehat",     EQ, "0", "V.A.1", "A ∘ Ê = 0"},
    {"ME.A_TC",              MutualExclusivity, "A * Tc",       EQ, "0", "V.A.2", "A ∘ Tᶜ = 0"},
    {"ME.A_TCHAT",           MutualExclusivity, "A * Tchat",    EQ, "0", "V.A.2", "A ∘ T̂ᶜ = 0"},
    {"ME.F_EHAT",            MutualExclusivity, "F * Ehat",     EQ, "0", "V.A.2", "F ∘ Ê = 0"},
    {"ME.FHAT_EHAT",         MutualExclusivity, "Fhat * Ehat",  EQ, "0", "V.A.2", "F̂ ∘ Ê = 0"},
    {"ME.T_EHAT",            MutualExclusivity, "T * Ehat",     EQ, "0", "V.A.2", "T ∘ Ê = 0"},
    {"ME.THAT_EHAT",         MutualExclusivity, "That * Ehat",  EQ, "0", "V.A.2", "T̂ ∘ Ê = 0"},
    {"ME.F_TC",              MutualExclusivity, "F * Tc",       EQ, "0", "V.A.3", "F ∘ Tᶜ = 0"},
    {"ME.F_TCHAT",           MutualExclusivity, "F * Tchat",    EQ, "0", "V.A.3", "F ∘ T̂ᶜ = 0"},
    {"ME.FHAT_TC",           MutualExclusivity, "Fhat * Tc",    EQ, "0", "V.A.3", "F̂ ∘ Tᶜ = 0"},
    {"ME.FHAT_TCHAT",        MutualExclusivity, "Fhat * Tchat", EQ, "0", "V.A.3", "F̂ ∘ T̂ᶜ = 0"},
    {"ME.T_TC",              MutualExclusivity, "T * Tc",       EQ, "0", "V.A.3", "T ∘ Tᶜ = 0"},
    {"ME.THAT_TCHAT",        MutualExclusivity, "That * Tchat", EQ, "0", "V.A.3", "T̂ ∘ T̂ᶜ = 0"},
    {"ME.THAT_TC",           MutualExclusivity, "That * Tc",    EQ, "0", "V.A.3", "T̂ ∘ Tᶜ = 0"},
    // Quoted as Tchat * Tchat = 0, which would force Tchat = 0 and contradict
    // B.TCHAT_TC. The T-left form completes the T/Tc hat pattern.
    {"ME.T_TCHAT",           MutualExclusivity, "T * Tchat",    EQ, "0", "V.A.3", "T̂ᶜ ∘ T̂ᶜ = 0"},

    // Substitute route flows.
    {"B.DHAT_TC",            Universal, "Dhat * Tc",    EQ, "Tc",     "V.B", "D̂ ∘ Tᶜ = Tᶜ"},
    {"B.LHAT_TC",            Universal, "Lhat * Tc",    EQ, "Tc",     "V.B", "L̂ ∘ Tᶜ = Tᶜ"},
    {"B.EHAT_TC",            Universal, "Ehat * Tc",    EQ, "Tc",     "V.B", "Ê ∘ Tᶜ = Tᶜ"},
    {"B.TCHAT_TC",           Universal, "Tchat * Tc",   EQ, "Tc",     "V.B", "T̂ᶜ ∘ Tᶜ = Tᶜ"},
    {"B.EHAT_L_TC",          Universal, "Ehat * L",     EQ, "Tc",     "V.B", "Ê ∘ L = Tᶜ"},
    {"B.EHAT_LHAT_TCHAT",    Universal, "Ehat * Lhat",  EQ, "Tchat",  "V.B", "Ê ∘ L̂ = T̂ᶜ"},
    {"B.EHAT_DHAT_TCHAT",    Universal, "Ehat * Dhat",  EQ, "Tchat",  "V.B", "Ê ∘ D̂ = T̂ᶜ"},
    {"B.L_EQ_T_PLUS_TC",     Universal, "L",            EQ, "T + Tc", "V.B", "L = T + Tᶜ"},
    {"B.D_EQ_F_T_TC",        Universal, "D",            EQ, "F + T + Tc", "V.B", "D = F + T + Tᶜ"},

    // Alternative route flows.
    {"C.L_THAT_T",           Universal, "L * That",     EQ, "T",      "V.C", "L ∘ T̂ = T"},
    {"C.DHAT_T",             Universal, "Dhat * T",     EQ, "T",      "V.C", "D̂ ∘ T = T"},
    {"C.LHAT_T",             Universal, "Lhat * T",     EQ, "T",      "V.C", "L̂ ∘ T = T"},
    {"C.DHAT_THAT",          Universal, "Dhat * That",  EQ, "That",   "V.C", "D̂ ∘ T̂ = T̂"},
    {"C.LHAT_THAT",          Universal, "Lhat * That",  EQ, "That",   "V.C", "L̂ ∘ T̂ = T̂"},
    {"C.A_T",                Universal, "A * T",        EQ, "T",      "V.C", "A ∘ T = T"},
    {"C.A_THAT",             Universal, "A * That",     EQ, "That",   "V.C", "A ∘ T̂ = T̂"},

    // Total indirect flows.
    {"D.DHAT_L",             Universal, "Dhat * L",     EQ, "L",      "V.D", "D̂ ∘ L = L"},
    {"D.DHAT_LHAT",          Universal, "Dhat * Lhat",  EQ, "Lhat",   "V.D", "D̂ ∘ L̂ = L̂"},
    {"D.LHAT_L",             Universal, "Lhat * L",     EQ, "L",      "V.D", "L̂ ∘ L = L"},

    // Flow and OD.
    {"E.FHAT_F",             Universal, "Fhat * F",     EQ, "F",      "V.E", "F̂ ∘ F = F"},
    {"E.DHAT_D",             Universal, "Dhat * D",     EQ, "D",      "V.E", "D̂ ∘ D = D"},
    {"E.DHAT_F",             Universal, "Dhat * F",     EQ, "F",      "V.E", "D̂ ∘ F = F"},
    {"E.DHAT_FHAT",          Universal, "Dhat * Fhat",  EQ, "Fhat",   "V.E", "D̂ ∘ F̂ = F̂"},
    {"E.A_FHAT",             Universal, "A * Fhat",     EQ, "Fhat",   "V.E", "A ∘ F̂ = F̂"},

    // Conditional on full utilization.
    {"FU.FHAT_EQ_A",         FullyUtilizedOnly, "Fhat", EQ, "A",      "IV, Table I", "F̂ = A"},
    {"FU.DHAT_EQ_PHAT",      FullyUtilizedOnly, "Dhat", EQ, "Phat",   "IV, Table I", "D̂ = P̂"},

    // Count-level forms whose argument treats tc as 0/1.
    {"CLAIMED.D_TC",         ClaimedAudit, "D * Tc",    EQ, "Tc",     "V.B", "D ∘ Tᶜ = Tᶜ"},
    {"CLAIMED.L_TC",         ClaimedAudit, "L * Tc",    EQ, "Tc",     "V.B", "L ∘ Tᶜ = Tᶜ"},

    {"X.EHAT_L_NEQ_L",       Negative, "Ehat * L",      EQ, "L",      "V.F", "Ê ∘ L = L"},
};
// clang-format on

std::vector<IdentitySpec> build_catalogue()
{
    std::vector<IdentitySpec> out;
    for (const Row& r : rows)
        out.push_back(IdentitySpec{r.id, r.cls, Expr::parse(r.lhs), r.relation, Expr::parse(r.rhs), r.section, r.quote});
    check_catalogue(out);
    return out;
}

} // namespace

std::string_view class_name(IdentityClass c)
{
    for (const auto& [cls, name] : class_names)
        if (cls == c)
            return name;
    return "?";
}

std::optional<IdentityClass> class_from_name(std::string_view name)
{
    for (const auto& [cls, n] : class_names)
        if (n == name)
            return cls;
    return std::nullopt;
}

std::string_view relation_symbol(Relation r)
{
    return r == Relation::Equal ? "=" : "<=";
}

std::string IdentitySpec::to_string() const
{
    return lhs.to_string() + " " + std::string(relation_symbol(relation)) + " " + rhs.to_string();
}

const std::vector<IdentitySpec>& list_identities()
{
    static const std::vector<IdentitySpec> catalogue = build_catalogue();
    return catalogue;
}

const IdentitySpec& find_identity(std::string_view id, std::span<const IdentitySpec> catalogue)
{
    const auto it = std::find_if(catalogue.begin(), catalogue.end(), [&](const IdentitySpec& s) { return s.id == id; });
    if (it == catalogue.end())
        throw UnknownIdentity(std::string(id));
    return *it;
}

void check_catalogue(std::span<const IdentitySpec> catalogue)
{
    std::set<std::string_view> ids;
    for (const auto& spec : catalogue) {
        if (spec.id.empty())
            throw Error("identity with empty id");
        if (!ids.insert(spec.id).second)
            throw Error("duplicate identity id " + spec.id);
    }
}

std::optional<std::pair<Expr, Expr>> exclusive_operands(const IdentitySpec& spec)
{
    if (spec.cls != MutualExclusivity || spec.relation != Relation::Equal)
        return std::nullopt;
    if (spec.lhs.is_symbol() || spec.lhs.op() != Op::Hadamard)
        return std::nullopt;
    if (!spec.rhs.is_symbol() || spec.rhs.sym() != Symbol::Zero)
        return std::nullopt;
    return std::pair{spec.lhs.lhs(), spec.lhs.rhs()};
}

IdentityEvaluationError::IdentityEvaluationError(std::string i, const std::string& what)
    : Error(i + ": " + what), id(std::move(i))
{
}

IdentityVerdict evaluate_identity(const IdentitySpec& spec, const StructureBundle& s, const UtilizationBundle& u)
{
    const Environment env(s, u);
    try {
        const CountMatrix lhs = evaluate(spec.lhs, env);
        const CountMatrix rhs = evaluate(spec.rhs, env);
        const auto bad = spec.relation == Relation::Equal ? first_difference(lhs, rhs) : first_leq_violation(lhs, rhs);

        IdentityVerdict v{spec.id, spec.cls, !bad.has_value(), std::nullopt};
        if (bad)
            v.witness = Witness{*bad, lhs(bad->row, bad->col), rhs(bad->row, bad->col)};
        return v;
    } catch (const IdentityEvaluationError&) {
        throw;
    } catch (const Error& e) {
        throw IdentityEvaluationError(spec.id, e.what());
    }
}

} // namespace netmx
