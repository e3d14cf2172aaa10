#pragma once

#include <gmpxx.h>

#include <optional>

#include "padrep/errors.hpp"

namespace padrep {

/// N = d * (10^len - 1) / 9, all len decimal digits equal to d.
struct Repdigit {
    int digit = 0;     // 1..9
    unsigned len = 0;  // >= 1
    mpz_class value;
};

Repdigit make_repdigit(int digit, unsigned len);

/// (d, len) iff N >= 1 is a repdigit, nullopt otherwise.
std::optional<Repdigit> classify_repdigit(const mpz_class& n);

}  // namespace padrep
