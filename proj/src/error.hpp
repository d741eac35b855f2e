#pragma once

#include <stdexcept>
#include <string>

namespace effortprep {

enum class ErrorKind {
    InvalidArgument,  // bad tokens, bad call arguments, violated preconditions
    Io,               // file not found, unreadable, unwritable
    Parse,            // malformed file contents
    Validation,       // data violates a dataset invariant
    Domain,           // math domain: log of non-positive, degenerate range, under-determined fit
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace effortprep
