#include "netmx/error.hpp"

#include <utility>

namespace netmx {

namespace {

std::string cell_text(std::size_t row, std::size_t col)
{
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

} // namespace

DimensionMismatch::DimensionMismatch(std::size_t lhs, std::size_t rhs)
    : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
{
}

UndefinedProduct::UndefinedProduct(std::size_t r, std::size_t c)
    : Error("undefined product INF * 0 at cell " + cell_text(r, c)), row(r), col(c)
{
}

InfiniteOperand::InfiniteOperand(std::size_t r, std::size_t c)
    : Error("infinite operand in sum at cell " + cell_text(r, c)), row(r), col(c)
{
}

NegativeResult::NegativeResult(std::size_t r, std::size_t c)
    : Error("negative result in difference at cell " + cell_text(r, c)), row(r), col(c)
{
}

CountOverflow::CountOverflow() : Error("count overflow") {}

ParseError::ParseError(std::string f, std::size_t l, const std::string& what)
    : Error(f + ":" + std::to_string(l) + ": " + what), file(std::move(f)), line(l)
{
}

UnknownIdentity::UnknownIdentity(const std::string& id) : Error("unknown identity id: " + id) {}

} // namespace netmx
