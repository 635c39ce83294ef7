#include "netmx/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace netmx {

std::string ExtendedCount::to_string() const
{
    return is_inf() ? std::string("INF") : std::to_string(v_);
}

ExtendedCount checked_add(ExtendedCount a, ExtendedCount b)
{
    ExtendedCount::value_type r = 0;
    if (__builtin_add_overflow(a.value(), b.value(), &r) || r > ExtendedCount::max_finite)
        throw CountOverflow();
    return r;
}

ExtendedCount checked_mul(ExtendedCount a, ExtendedCount b)
{
    if (a.is_inf() || b.is_inf())
        return INF;
    ExtendedCount::value_type r = 0;
    if (__builtin_mul_overflow(a.value(), b.value(), &r) || r > ExtendedCount::max_finite)
        throw CountOverflow();
    return r;
}

std::ostream& operator<<(std::ostream& os, ExtendedCount c)
{
    return os << c.to_string();
}

// CountMatrix

CountMatrix::CountMatrix(std::size_t n, ExtendedCount fill) : n_(n), cells_(n * n, fill)
{
    if (n == 0)
        throw std::invalid_argument("matrix dimension must be at least 1");
}

CountMatrix::CountMatrix(std::initializer_list<std::initializer_list<ExtendedCount>> rows)
    : CountMatrix(from_rows(std::vector<std::vector<ExtendedCount>>(rows.begin(), rows.end())))
{
}

CountMatrix CountMatrix::from_rows(const std::vector<std::vector<ExtendedCount>>& rows)
{
    CountMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw DimensionMismatch(rows.size(), rows[i].size());
        std::copy(rows[i].begin(), rows[i].end(), m.cells_.begin() + static_cast<std::ptrdiff_t>(i * m.n_));
    }
    return m;
}

ExtendedCount CountMatrix::at(std::size_t i, std::size_t j) const
{
    if (i >= n_ || j >= n_)
        throw std::out_of_range("matrix index out of range");
    return (*this)(i, j);
}

// BinaryMatrix

BinaryMatrix::BinaryMatrix(std::size_t n) : n_(n), cells_(n * n, 0)
{
    if (n == 0)
        throw std::invalid_argument("matrix dimension must be at least 1");
}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) : BinaryMatrix(rows.size())
{
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_)
            throw DimensionMismatch(n_, row.size());
        std::size_t j = 0;
        for (int v : row) {
            if (v != 0 && v != 1)
                throw std::invalid_argument("binary matrix cell must be 0 or 1");
            set(i, j++, v == 1);
        }
        ++i;
    }
}

bool BinaryMatrix::at(std::size_t i, std::size_t j) const
{
    if (i >= n_ || j >= n_)
        throw std::out_of_range("matrix index out of range");
    return (*this)(i, j);
}

std::size_t BinaryMatrix::count_ones() const noexcept
{
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

BinaryMatrix::operator CountMatrix() const
{
    CountMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            m(i, j) = (*this)(i, j) ? 1 : 0;
    return m;
}

// Operations

namespace {

void require_same(std::size_t a, std::size_t b)
{
    if (a != b)
        throw DimensionMismatch(a, b);
}

} // namespace

BinaryMatrix binarize(const CountMatrix& m)
{
    BinaryMatrix out(m.n());
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j) {
            const ExtendedCount c = m(i, j);
            out.set(i, j, c.is_finite() && !c.is_zero());
        }
    return out;
}

CountMatrix hadamard(const CountMatrix& x, const CountMatrix& y)
{
    require_same(x.n(), y.n());
    CountMatrix out(x.n());
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t j = 0; j < x.n(); ++j) {
            const ExtendedCount a = x(i, j);
            const ExtendedCount b = y(i, j);
            if ((a.is_inf() && b.is_zero()) || (a.is_zero() && b.is_inf()))
                throw UndefinedProduct(i, j);
            out(i, j) = checked_mul(a, b);
        }
    return out;
}

BinaryMatrix hadamard(const BinaryMatrix& x, const BinaryMatrix& y)
{
    require_same(x.n(), y.n());
    BinaryMatrix out(x.n());
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t j = 0; j < x.n(); ++j)
            out.set(i, j, x(i, j) && y(i, j));
    return out;
}

CountMatrix ew_add(const CountMatrix& x, const CountMatrix& y)
{
    require_same(x.n(), y.n());
    CountMatrix out(x.n());
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t j = 0; j < x.n(); ++j) {
            if (x(i, j).is_inf() || y(i, j).is_inf())
                throw InfiniteOperand(i, j);
            out(i, j) = checked_add(x(i, j), y(i, j));
        }
    return out;
}

CountMatrix ew_sub(const CountMatrix& x, const CountMatrix& y)
{
    require_same(x.n(), y.n());
    CountMatrix out(x.n());
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t j = 0; j < x.n(); ++j) {
            const ExtendedCount a = x(i, j);
            const ExtendedCount b = y(i, j);
            if (b.is_inf())
                throw NegativeResult(i, j);
            if (a.is_inf()) {
                out(i, j) = INF;
                continue;
            }
            if (b > a)
                throw NegativeResult(i, j);
            out(i, j) = a.value() - b.value();
        }
    return out;
}

std::optional<Cell> first_difference(const CountMatrix& x, const CountMatrix& y)
{
    require_same(x.n(), y.n());
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t j = 0; j < x.n(); ++j)
            if (x(i, j) != y(i, j))
                return Cell{i, j};
    return std::nullopt;
}

std::optional<Cell> first_leq_violation(const CountMatrix& x, const CountMatrix& y)
{
    require_same(x.n(), y.n());
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t j = 0; j < x.n(); ++j)
            if (x(i, j) > y(i, j))
                return Cell{i, j};
    return std::nullopt;
}

bool ew_leq(const CountMatrix& x, const CountMatrix& y)
{
    return !first_leq_violation(x, y).has_value();
}

bool is_zero(const CountMatrix& x)
{
    const auto cells = x.cells();
    return std::all_of(cells.begin(), cells.end(), [](ExtendedCount c) { return c.is_zero(); });
}

bool mutually_exclusive(const CountMatrix& x, const CountMatrix& y)
{
    require_same(x.n(), y.n());
    const auto xs = x.cells();
    const auto ys = y.cells();
    for (std::size_t k = 0; k < xs.size(); ++k)
        if (!xs[k].is_zero() && !ys[k].is_zero())
            return false;
    return true;
}

} // namespace netmx
