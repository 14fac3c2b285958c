#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plurichern {

enum class ErrorKind {
    InvalidArgument,
    OutOfRange,
    PreconditionViolation,
    HypothesisNotMet,
    InconsistentInput,
    InvalidPolarizationType,
    NoetherViolation,
    ResourceLimit,
    Io,
};

std::string_view to_string(ErrorKind kind);

// All domain failures surface as this exception; `kind()` is the stable
// discriminator, the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace plurichern
