#include "plurichern/error.hpp"

namespace plurichern {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::HypothesisNotMet: return "hypothesis-not-met";
    case ErrorKind::InconsistentInput: return "inconsistent-input";
    case ErrorKind::InvalidPolarizationType: return "invalid-polarization-type";
    case ErrorKind::NoetherViolation: return "noether-violation";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Io: return "io-error";
    }
    return "unknown";
}

}  // namespace plurichern
