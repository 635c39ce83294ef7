#include "netmx/expression.hpp"

#include "netmx/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace netmx {

namespace {

constexpr std::array<std::pair<Symbol, std::string_view>, 16> symbol_names{{
    {Symbol::A, "A"},
    {Symbol::P, "P"},
    {Symbol::Phat, "Phat"},
    {Symbol::E, "E"},
    {Symbol::Ehat, "Ehat"},
    {Symbol::F, "F"},
    {Symbol::Fhat, "Fhat"},
    {Symbol::D, "D"},
    {Symbol::Dhat, "Dhat"},
    {Symbol::L, "L"},
    {Symbol::Lhat, "Lhat"},
    {Symbol::T, "T"},
    {Symbol::That, "That"},
    {Symbol::Tc, "Tc"},
    {Symbol::Tchat, "Tchat"},
    {Symbol::Zero, "0"},
}};

int precedence(Op op)
{
    return op == Op::Hadamard ? 2 : 1;
}

char op_char(Op op)
{
    switch (op) {
    case Op::Hadamard:
        return '*';
    case Op::Add:
        return '+';
    case Op::Sub:
        return '-';
    }
    return '?';
}

/// Recursive-descent parser:
///   sum     := product (('+' | '-') product)*
///   product := atom ('*' atom)*
///   atom    := NAME | '0' | '(' sum ')'
class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse_all()
    {
        Expr e = sum();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    Expr sum()
    {
        Expr e = product();
        for (;;) {
            skip_space();
            if (accept('+'))
                e = Expr::binary(Op::Add, e, product());
            else if (accept('-'))
                e = Expr::binary(Op::Sub, e, product());
            else
                return e;
        }
    }

    Expr product()
    {
        Expr e = atom();
        for (;;) {
            skip_space();
            if (!accept('*'))
                return e;
            e = Expr::binary(Op::Hadamard, e, atom());
        }
    }

    Expr atom()
    {
        skip_space();
        if (accept('(')) {
            Expr e = sum();
            skip_space();
            if (!accept(')'))
                fail("expected ')'");
            return e;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of expression");
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto sym = symbol_from_name(name);
        if (!sym)
            fail("unknown symbol '" + std::string(name) + "'");
        return Expr::symbol(*sym);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("<expr>", 1, what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void render(const Expr& e, std::string& out)
{
    if (e.is_symbol()) {
        out += symbol_name(e.sym());
        return;
    }
    const int prec = precedence(e.op());
    const bool wrap_lhs = !e.lhs().is_symbol() && precedence(e.lhs().op()) < prec;
    // Equal-precedence right operands are parenthesised so the tree shape round-trips.
    const bool wrap_rhs = !e.rhs().is_symbol() && precedence(e.rhs().op()) <= prec;

    if (wrap_lhs)
        out += '(';
    render(e.lhs(), out);
    if (wrap_lhs)
        out += ')';
    out += ' ';
    out += op_char(e.op());
    out += ' ';
    if (wrap_rhs)
        out += '(';
    render(e.rhs(), out);
    if (wrap_rhs)
        out += ')';
}

void collect(const Expr& e, std::vector<Symbol>& out)
{
    if (e.is_symbol()) {
        if (std::find(out.begin(), out.end(), e.sym()) == out.end())
            out.push_back(e.sym());
        return;
    }
    collect(e.lhs(), out);
    collect(e.rhs(), out);
}

} // namespace

std::string_view symbol_name(Symbol s)
{
    for (const auto& [sym, name] : symbol_names)
        if (sym == s)
            return name;
    return "?";
}

std::optional<Symbol> symbol_from_name(std::string_view name)
{
    for (const auto& [sym, n] : symbol_names)
        if (n == name)
            return sym;
    return std::nullopt;
}

Expr Expr::symbol(Symbol s)
{
    auto node = std::make_shared<Node>();
    node->sym = s;
    return Expr(std::move(node));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs)
{
    auto node = std::make_shared<Node>();
    node->is_leaf = false;
    node->op = op;
    node->lhs = std::make_shared<const Expr>(std::move(lhs));
    node->rhs = std::make_shared<const Expr>(std::move(rhs));
    return Expr(std::move(node));
}

Expr Expr::parse(std::string_view text)
{
    return Parser(text).parse_all();
}

std::string Expr::to_string() const
{
    std::string out;
    render(*this, out);
    return out;
}

std::vector<Symbol> Expr::symbols() const
{
    std::vector<Symbol> out;
    collect(*this, out);
    return out;
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.is_symbol() != b.is_symbol())
        return false;
    if (a.is_symbol())
        return a.sym() == b.sym();
    return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

Environment::Environment(const StructureBundle& s, const UtilizationBundle& u) : s_(s), u_(u)
{
    if (s.A.n() != u.F.n())
        throw DimensionMismatch(s.A.n(), u.F.n());
}

CountMatrix Environment::lookup(Symbol sym) const
{
    switch (sym) {
    case Symbol::A:
        return s_.A;
    case Symbol::P:
        return s_.P;
    case Symbol::Phat:
        return s_.Phat;
    case Symbol::E:
        return s_.E;
    case Symbol::Ehat:
        return s_.Ehat;
    case Symbol::F:
        return u_.F;
    case Symbol::Fhat:
        return u_.Fhat;
    case Symbol::D:
        return u_.D;
    case Symbol::Dhat:
        return u_.Dhat;
    case Symbol::L:
        return u_.L;
    case Symbol::Lhat:
        return u_.Lhat;
    case Symbol::T:
        return u_.T;
    case Symbol::That:
        return u_.That;
    case Symbol::Tc:
        return u_.Tc;
    case Symbol::Tchat:
        return u_.Tchat;
    case Symbol::Zero:
        return CountMatrix(n());
    }
    return CountMatrix(n());
}

CountMatrix evaluate(const Expr& e, const Environment& env)
{
    if (e.is_symbol())
        return env.lookup(e.sym());
    const CountMatrix lhs = evaluate(e.lhs(), env);
    const CountMatrix rhs = evaluate(e.rhs(), env);
    switch (e.op()) {
    case Op::Hadamard:
        return hadamard(lhs, rhs);
    case Op::Add:
        return ew_add(lhs, rhs);
    case Op::Sub:
        return ew_sub(lhs, rhs);
    }
    return lhs;
}

} // namespace netmx
