#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netmx {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs);
};

/// INF multiplied by 0.
class UndefinedProduct : public Error
{
public:
    UndefinedProduct(std::size_t row, std::size_t col);

    std::size_t row;
    std::size_t col;
};

class InfiniteOperand : public Error
{
public:
    InfiniteOperand(std::size_t row, std::size_t col);

    std::size_t row;
    std::size_t col;
};

/// Elementwise subtraction would leave a cell below zero.
class NegativeResult : public Error
{
public:
    NegativeResult(std::size_t row, std::size_t col);

    std::size_t row;
    std::size_t col;
};

class CountOverflow : public Error
{
public:
    CountOverflow();
};

class GraphError : public Error
{
public:
    using Error::Error;
};

/// Raised while reading any of the text inputs; carries the source location.
class ParseError : public Error
{
public:
    ParseError(std::string file, std::size_t line, const std::string& what);

    std::string file;
    std::size_t line;
};

class ConfigError : public Error
{
public:
    using Error::Error;
};

class UnknownIdentity : public Error
{
public:
    explicit UnknownIdentity(const std::string& id);
};

} // namespace netmx
