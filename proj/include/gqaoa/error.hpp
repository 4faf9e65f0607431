#pragma once

#include <stdexcept>
#include <string>

namespace gqaoa {

/// Category used by the C API and the CLI to pick status and exit codes.
enum class ErrorKind {
    InvalidArgument,
    Parse,
    Domain,
    Unsupported,
    CapExceeded,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string &what)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
    throw Error(kind, what);
}

inline void require(bool cond, const std::string &what) {
    if (!cond) {
        fail(ErrorKind::InvalidArgument, what);
    }
}

} // namespace gqaoa
