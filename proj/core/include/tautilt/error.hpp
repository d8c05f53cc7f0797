#pragma once

#include <stdexcept>
#include <string>

namespace tautilt {

/// Base of every error raised by the engine. `origin()` names the module
/// that raised it (e.g. "homological"), which the CLI echoes to the user.
class Error : public std::runtime_error {
public:
    Error(std::string origin, const std::string& what)
        : std::runtime_error(what), origin_(std::move(origin)) {}

    [[nodiscard]] const std::string& origin() const noexcept { return origin_; }

private:
    std::string origin_;
};

/// A caller broke an operation's precondition (dimension mismatch, wrong
/// algebra, non-validated input).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Malformed DSL or JSON input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(std::string origin, const std::string& what, int line, int column)
        : Error(std::move(origin), format(what, line, column)), line_(line), column_(column) {}

    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line == 0) return what;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
    }

    int line_;
    int column_;
};

/// The input is well-formed but the requested computation is outside what
/// the engine can certify: a cap was exceeded, a module is not tau-rigid,
/// an endomorphism ring does not split over the rationals, ...
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace tautilt
