#pragma once

#include <stdexcept>
#include <string>

namespace endolab {

// All recoverable failures are reported through these types. Messages are
// meant for CLI diagnostics, the type carries the contract violated.

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string & what) : std::invalid_argument(what) {}
};

struct IncompatibleSignatures : std::invalid_argument {
    explicit IncompatibleSignatures(const std::string & what) : std::invalid_argument(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string & what) : std::invalid_argument(what) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string & what) : std::runtime_error(what) {}
};

struct NotAnEndomorphism : std::invalid_argument {
    explicit NotAnEndomorphism(const std::string & what) : std::invalid_argument(what) {}
};

struct InconsistentParts : std::runtime_error {
    explicit InconsistentParts(const std::string & what) : std::runtime_error(what) {}
};

struct CopySplit : std::runtime_error {
    explicit CopySplit(const std::string & what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string & what) : std::invalid_argument(what) {}
};

struct WindowTooSmall : std::runtime_error {
    explicit WindowTooSmall(const std::string & what) : std::runtime_error(what) {}
};

}
