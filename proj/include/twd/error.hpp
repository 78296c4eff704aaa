#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twd {

// Base of everything the library throws on bad input or violated contracts.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed `.itab` / formula text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A class-specific cell could not be turned into a value set.
class ResolutionError : public Error {
public:
    enum class Kind { UnresolvedReference, EmptyResolution };

    ResolutionError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// An enumeration (worlds, formulas, closure subsets) would exceed its cap.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

// Argument outside an operation's precondition (unknown object, empty attribute set, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace twd
