#pragma once

#include <stdexcept>
#include <string>

namespace dmp {

// Rejected input: bad vertex, self-loop, duplicate edge, size overflow, ...
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Text format violation. `line` is 1-based and already part of the message.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Instance too large for an exact method's supported range, or a search whose
// estimated class count exceeds the configured budget and no wall-clock budget
// was given.
class FeasibilityError : public std::runtime_error {
public:
    explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dmp
