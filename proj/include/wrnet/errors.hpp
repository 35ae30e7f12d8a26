#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wrnet {

/// Graph violates an E-graph invariant (self-loop, isolated vertex, bad id...).
class InvalidGraph : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Rates are missing, nonpositive or do not match the edge set.
class InvalidRates : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Caller broke an operation's precondition in a way that is not a graph property.
class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Internal consistency check failed. Always a bug in this library.
class InvariantError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Network file syntax error with a 1-based position.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + message),
          line_(line),
          column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace wrnet
