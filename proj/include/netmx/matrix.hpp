#pragma once

#include "netmx/extended_count.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace netmx {

/// Row/column position of a single cell (row = source, column = sink).
struct Cell
{
    std::size_t row = 0;
    std::size_t col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Dense n x n matrix of ExtendedCount, stored row-major.
class CountMatrix
{
public:
    explicit CountMatrix(std::size_t n, ExtendedCount fill = 0);
    CountMatrix(std::initializer_list<std::initializer_list<ExtendedCount>> rows);

    static CountMatrix from_rows(const std::vector<std::vector<ExtendedCount>>& rows);

    std::size_t n() const noexcept { return n_; }

    ExtendedCount operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * n_ + j]; }
    ExtendedCount& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * n_ + j]; }

    /// Bounds-checked access.
    ExtendedCount at(std::size_t i, std::size_t j) const;

    std::span<const ExtendedCount> cells() const noexcept { return cells_; }

    friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

private:
    std::size_t n_;
    std::vector<ExtendedCount> cells_;
};

/// Dense n x n matrix over {0,1}.
///
/// Converts implicitly and losslessly into a CountMatrix, so every
/// count-level operation also accepts binary operands.
class BinaryMatrix
{
public:
    explicit BinaryMatrix(std::size_t n);
    BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t n() const noexcept { return n_; }

    bool operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) noexcept { cells_[i * n_ + j] = v ? 1 : 0; }

    bool at(std::size_t i, std::size_t j) const;

    std::size_t count_ones() const noexcept;

    operator CountMatrix() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    std::size_t n_;
    std::vector<std::uint8_t> cells_;
};

/// 1 where the cell is finite and positive, 0 for 0 and INF.
BinaryMatrix binarize(const CountMatrix& m);

/// Elementwise product. INF*k = INF for k > 0; INF*0 throws UndefinedProduct.
CountMatrix hadamard(const CountMatrix& x, const CountMatrix& y);
BinaryMatrix hadamard(const BinaryMatrix& x, const BinaryMatrix& y);

/// Elementwise sum; operands must be finite.
CountMatrix ew_add(const CountMatrix& x, const CountMatrix& y);

/// Elementwise difference. INF - finite stays INF; a negative cell or a
/// finite - INF cell throws NegativeResult.
CountMatrix ew_sub(const CountMatrix& x, const CountMatrix& y);

/// x <= y in every cell, INF being the maximum.
bool ew_leq(const CountMatrix& x, const CountMatrix& y);

bool is_zero(const CountMatrix& x);

/// No cell is nonzero in both x and y. INF counts as nonzero.
bool mutually_exclusive(const CountMatrix& x, const CountMatrix& y);

/// First cell in row-major order where x and y differ.
std::optional<Cell> first_difference(const CountMatrix& x, const CountMatrix& y);

/// First cell in row-major order where x > y.
std::optional<Cell> first_leq_violation(const CountMatrix& x, const CountMatrix& y);

} // namespace netmx
