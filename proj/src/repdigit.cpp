#include "padrep/repdigit.hpp"

namespace padrep {

Repdigit make_repdigit(int digit, unsigned len) {
    if (digit < 1 || digit > 9) throw DomainError("make_repdigit: digit out of [1,9]");
    if (len < 1) throw DomainError("make_repdigit: length must be >= 1");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, len);
    mpz_class value = digit * (p - 1) / 9;
    return Repdigit{digit, len, value};
}

std::optional<Repdigit> classify_repdigit(const mpz_class& n) {
    if (n < 1) return std::nullopt;
    std::string s = n.get_str();
    for (char c : s)
        if (c != s[0]) return std::nullopt;
    return Repdigit{s[0] - '0', static_cast<unsigned>(s.size()), n};
}

}  // namespace padrep
