#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hitcalc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Inputs of mismatched degree or arity (e.g. a monomial outside a column universe).
class DegreeError : public Error
{
public:
    using Error::Error;
};

/// A computation would exceed the configured column limit.
class CapacityError : public Error
{
public:
    CapacityError(std::size_t columns, std::size_t cap)
        : Error("column universe of size " + std::to_string(columns) + " exceeds the limit of " +
                std::to_string(cap) + " (set HITCALC_COLUMN_CAP to raise it)"),
          columns_(columns),
          cap_(cap)
    {
    }

    std::size_t columns() const noexcept { return columns_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t columns_;
    std::size_t cap_;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column)
    {
        if (line == 0)
            return what;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

}  // namespace hitcalc
