#pragma once

#include <mpfr.h>

#include "padrep/errors.hpp"

namespace padrep {

/// Fixed guard-digit count: every certified value carries an error radius
/// of at most 10^(-decimal_digits + kGuardDigits).
inline constexpr int kGuardDigits = 5;

/// Working-precision contract. decimal_digits is the current working
/// precision, max_digits the escalation cap.
struct PrecisionContext {
    int decimal_digits = 50;
    int max_digits = 2000;

    PrecisionContext() = default;
    PrecisionContext(int digits, int cap) : decimal_digits(digits), max_digits(cap) {
        if (digits < 50) throw DomainError("PrecisionContext: decimal_digits must be >= 50");
        if (cap < digits) throw DomainError("PrecisionContext: max_digits must be >= decimal_digits");
    }

    explicit PrecisionContext(int digits) : PrecisionContext(digits, digits < 2000 ? 2000 : digits) {}

    /// mpfr working precision in bits, with headroom beyond the decimal target.
    [[nodiscard]] mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(decimal_digits * 3.3219280948873626) + 32;
    }

    [[nodiscard]] bool can_escalate() const { return decimal_digits < max_digits; }

    [[nodiscard]] PrecisionContext escalated() const {
        int next = decimal_digits * 2;
        if (next > max_digits) next = max_digits;
        return {next, max_digits};
    }
};

}  // namespace padrep
