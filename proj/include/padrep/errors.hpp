#pragma once

#include <stdexcept>
#include <string>

namespace padrep {

/// Thrown when a value cannot be certified even at the escalation cap.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a continued-fraction expansion is not deep enough.
struct DepthExhausted : std::runtime_error {
    explicit DepthExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A non-positive epsilon in a reduction sweep that the exception protocol
/// could not explain (not an integer mu, no deeper convergent helped).
struct UnresolvedException : std::runtime_error {
    explicit UnresolvedException(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace padrep
