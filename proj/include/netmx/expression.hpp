#pragma once

#include "netmx/matrix.hpp"
#include "netmx/structure.hpp"
#include "netmx/utilization.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netmx {

/// Matrices an identity may reference. Zero is the all-zero matrix.
enum class Symbol
{
    A,
    P,
    Phat,
    E,
    Ehat,
    F,
    Fhat,
    D,
    Dhat,
    L,
    Lhat,
    T,
    That,
    Tc,
    Tchat,
    Zero,
};

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

enum class Op
{
    Hadamard, // '*'
    Add,      // '+'
    Sub,      // '-'
};

/// Immutable expression tree over matrix symbols.
///
/// Text form: symbols by name, `0`, infix `*` (Hadamard, binds tightest),
/// `+` and `-` (left associative), parentheses. Whitespace is ignored.
class Expr
{
public:
    static Expr symbol(Symbol s);
    static Expr binary(Op op, Expr lhs, Expr rhs);

    /// Throws ParseError (file "<expr>", line 1) on malformed text.
    static Expr parse(std::string_view text);

    bool is_symbol() const noexcept { return node_->is_leaf; }
    Symbol sym() const noexcept { return node_->sym; }
    Op op() const noexcept { return node_->op; }
    const Expr& lhs() const { return *node_->lhs; }
    const Expr& rhs() const { return *node_->rhs; }

    /// Canonical text; parse(to_string()) reproduces the tree.
    std::string to_string() const;

    /// Distinct symbols referenced, in first-use order.
    std::vector<Symbol> symbols() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node
    {
        bool is_leaf = true;
        Symbol sym = Symbol::Zero;
        Op op = Op::Hadamard;
        std::shared_ptr<const Expr> lhs;
        std::shared_ptr<const Expr> rhs;
    };

    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Binds symbols to the matrices of one dataset.
class Environment
{
public:
    Environment(const StructureBundle& s, const UtilizationBundle& u);

    std::size_t n() const noexcept { return s_.A.n(); }
    CountMatrix lookup(Symbol sym) const;

private:
    const StructureBundle& s_;
    const UtilizationBundle& u_;
};

/// Evaluates with the matrix-core operations; their errors propagate.
CountMatrix evaluate(const Expr& e, const Environment& env);

} // namespace netmx
