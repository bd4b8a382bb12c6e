#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teamtl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input (maps to CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured size cap was exceeded; never a verdict (CLI exit code 3).
class ResourceError : public Error {
public:
    using Error::Error;
};

struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& message, SourceSpan span)
        : InputError(message + " at " + std::to_string(span.start) + ".." +
                     std::to_string(span.end)),
          span_(span) {}

    [[nodiscard]] SourceSpan span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

/// The trace team of a structure cannot be enumerated as finitely many lassos.
class LassoForestViolation : public InputError {
public:
    LassoForestViolation(const std::string& world)
        : InputError("lasso-forest violation: world '" + world +
                     "' lies on a cycle and has more than one successor"),
          world_(world) {}

    [[nodiscard]] const std::string& world() const noexcept { return world_; }

private:
    std::string world_;
};

class SplitjunctionPresent : public InputError {
public:
    SplitjunctionPresent()
        : InputError("formula contains a splitjunction; split-free model checking does not apply") {}
};

class GenAtomPresent : public InputError {
public:
    GenAtomPresent()
        : InputError("formula contains a generalised atom; split-free model checking does not apply") {}
};

}  // namespace teamtl
