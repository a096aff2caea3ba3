#pragma once

#include <stdexcept>
#include <string>

namespace burn {

/// Malformed instance text (bad directive, bad label, repeated label in an edge, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// An exact search was asked to run on an instance larger than its configured guard.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested parameter has no defined value on this instance
/// (e.g. independence in the presence of an empty edge).
class UndefinedValue : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace burn
