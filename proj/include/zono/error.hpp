#pragma once

#include <stdexcept>
#include <string>

namespace zono {

/// Base class for every error raised by the library. `code()` is a stable
/// machine-readable identifier surfaced by the command-line tool.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// A mathematical precondition failed (rank, dependence, bad index, ...).
class MathError : public Error {
public:
    using Error::Error;
};

/// A desk-scale guard refused to enumerate.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Two independent computation paths produced different answers.
class DisagreementError : public Error {
public:
    using Error::Error;
};

}  // namespace zono
