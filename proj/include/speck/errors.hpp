#pragma once

#include <stdexcept>
#include <string>

namespace speck {

// max(k) diverges as f -> 0.  Reported as its own error type so callers can
// render "unbounded" instead of a fake finite number.
class unbounded_limit_error : public std::domain_error {
public:
    explicit unbounded_limit_error(const std::string& what)
        : std::domain_error(what) {}
};

// Structured-text parse failure.  `line` is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// Filesystem-level failure (missing input, unwritable output).
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace speck
