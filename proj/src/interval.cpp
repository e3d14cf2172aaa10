#include "padrep/interval.hpp"

#include <algorithm>
#include <cstdlib>

namespace padrep {

Ival::Ival(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Ival::Ival(const Ival& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Ival::Ival(Ival&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    // leave o in a destructible state
    mpfr_init2(o.lo_, MPFR_PREC_MIN);
    mpfr_init2(o.hi_, MPFR_PREC_MIN);
}

Ival& Ival::operator=(const Ival& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Ival& Ival::operator=(Ival&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Ival::~Ival() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Ival Ival::from_si(long v, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Ival Ival::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Ival Ival::from_str(const std::string& s, mpfr_prec_t prec) {
    Ival r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 &&
        mpfr_number_p(r.lo_) == 0)
        throw DomainError("Ival::from_str: unparsable '" + s + "'");
    mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
    return r;
}

Ival Ival::from_double(double v, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

Ival Ival::from_endpoints_copy(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
    Ival r(prec);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    return r;
}

static mpfr_prec_t join_prec(const Ival& a, const Ival& b) {
    return std::max(a.prec(), b.prec());
}

Ival operator+(const Ival& a, const Ival& b) {
    Ival r(join_prec(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Ival operator-(const Ival& a, const Ival& b) {
    Ival r(join_prec(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Ival operator-(const Ival& a) {
    Ival r(a.prec());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Ival operator*(const Ival& a, const Ival& b) {
    Ival r(join_prec(a, b));
    // min/max over the four endpoint products with outward rounding
    mpfr_t p;
    mpfr_init2(p, r.prec_);
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(p, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
    mpfr_mul(p, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
    mpfr_mul(p, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);

    mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(p, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
    mpfr_mul(p, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
    mpfr_mul(p, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
    mpfr_clear(p);
    return r;
}

Ival operator/(const Ival& a, const Ival& b) {
    if (b.contains_zero()) throw DomainError("Ival division by interval containing zero");
    Ival r(join_prec(a, b));
    mpfr_t p;
    mpfr_init2(p, r.prec_);
    mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(p, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
    mpfr_div(p, a.hi_, b.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
    mpfr_div(p, a.hi_, b.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);

    mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(p, a.lo_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
    mpfr_div(p, a.hi_, b.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
    mpfr_div(p, a.hi_, b.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
    mpfr_clear(p);
    return r;
}

Ival operator+(const Ival& a, long b) { return a + Ival::from_si(b, a.prec()); }
Ival operator-(const Ival& a, long b) { return a - Ival::from_si(b, a.prec()); }
Ival operator-(long a, const Ival& b) { return Ival::from_si(a, b.prec()) - b; }
Ival operator*(const Ival& a, long b) { return a * Ival::from_si(b, a.prec()); }
Ival operator/(const Ival& a, long b) { return a / Ival::from_si(b, a.prec()); }
Ival operator/(long a, const Ival& b) { return Ival::from_si(a, b.prec()) / b; }

Ival sqrt(const Ival& x) {
    Ival r(x.prec());
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
    return r;
}

Ival cbrt(const Ival& x) {
    Ival r(x.prec());
    mpfr_cbrt(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_cbrt(r.hi_, x.hi_, MPFR_RNDU);
    return r;
}

Ival log(const Ival& x) {
    if (!x.certainly_positive()) throw DomainError("Ival log of non-positive interval");
    Ival r(x.prec());
    mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
    return r;
}

Ival exp(const Ival& x) {
    Ival r(x.prec());
    mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
    return r;
}

Ival abs(const Ival& x) {
    Ival r(x.prec());
    if (x.certainly_positive()) return x;
    if (x.certainly_negative()) return -x;
    // straddles zero
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, x.prec());
    mpfr_neg(t, x.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, t, x.hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Ival sqr(const Ival& x) {
    if (x.certainly_positive() || x.certainly_negative()) return x * x;
    Ival a = abs(x);
    Ival r(x.prec());
    mpfr_set_zero(r.lo_, 1);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Ival pow_si(const Ival& x, long n) {
    if (n == 0) return Ival::from_si(1, x.prec());
    if (!x.certainly_positive()) throw DomainError("pow_si requires a positive base interval");
    Ival r(x.prec());
    if (n > 0) {
        mpfr_pow_si(r.lo_, x.lo_, n, MPFR_RNDD);
        mpfr_pow_si(r.hi_, x.hi_, n, MPFR_RNDU);
    } else {
        mpfr_pow_si(r.lo_, x.hi_, n, MPFR_RNDD);
        mpfr_pow_si(r.hi_, x.lo_, n, MPFR_RNDU);
    }
    return r;
}

Ival mul_mpz(const Ival& a, const mpz_class& z) {
    Ival r(a.prec());
    if (mpz_sgn(z.get_mpz_t()) >= 0) {
        mpfr_mul_z(r.lo_, a.lo_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_, a.hi_, z.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_mul_z(r.lo_, a.hi_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_, a.lo_, z.get_mpz_t(), MPFR_RNDU);
    }
    return r;
}

Ival div_mpz(const Ival& a, const mpz_class& z) {
    int s = mpz_sgn(z.get_mpz_t());
    if (s == 0) throw DomainError("div_mpz by zero");
    Ival r(a.prec());
    if (s > 0) {
        mpfr_div_z(r.lo_, a.lo_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_div_z(r.hi_, a.hi_, z.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_div_z(r.lo_, a.hi_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_div_z(r.hi_, a.lo_, z.get_mpz_t(), MPFR_RNDU);
    }
    return r;
}

bool Ival::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Ival::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Ival::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Ival::certainly_lt(const Ival& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool Ival::certainly_le(const Ival& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }

bool Ival::contains(const Ival& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool Ival::overlaps(const Ival& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

Ival Ival::intersect(const Ival& o) const {
    if (!overlaps(o)) throw DomainError("Ival::intersect: disjoint enclosures");
    Ival r(std::max(prec_, o.prec_));
    mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

bool Ival::contains_mpz(const mpz_class& z) const {
    return mpfr_cmp_z(lo_, z.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, z.get_mpz_t()) >= 0;
}

bool Ival::floor_unique(mpz_class& out) const {
    mpz_class fl, fh;
    mpfr_get_z(fl.get_mpz_t(), lo_, MPFR_RNDD);
    mpfr_get_z(fh.get_mpz_t(), hi_, MPFR_RNDD);
    if (fl != fh) return false;
    out = fl;
    return true;
}

mpz_class Ival::round_mid() const {
    Ival m = mid();
    mpz_class r;
    mpfr_get_z(r.get_mpz_t(), m.lo_, MPFR_RNDN);
    return r;
}

Ival Ival::dist_to_nearest_int() const {
    mpz_class n = round_mid();
    Ival d(prec_);
    mpfr_sub_z(d.lo_, lo_, n.get_mpz_t(), MPFR_RNDD);
    mpfr_sub_z(d.hi_, hi_, n.get_mpz_t(), MPFR_RNDU);
    Ival a = abs(d);
    // ||x|| <= 1/2 always; the enclosure |x - n| is only the exact distance
    // while it stays below 1/2, so clamp conservatively otherwise.
    Ival half(prec_);
    mpfr_set_d(half.lo_, 0.5, MPFR_RNDD);
    mpfr_set_d(half.hi_, 0.5, MPFR_RNDU);
    if (!a.certainly_le(half)) {
        mpfr_set_zero(a.lo_, 1);
        mpfr_set_d(a.hi_, 0.5, MPFR_RNDU);
    }
    return a;
}

Ival Ival::mid() const {
    Ival r(prec_);
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDD);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDU);
    return r;
}

Ival Ival::rad() const {
    Ival r(prec_);
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
    if (mpfr_sgn(r.hi_) < 0) mpfr_set_zero(r.hi_, 1);
    mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
    return r;
}

double Ival::mid_d() const {
    Ival m = mid();
    return mpfr_get_d(m.lo_, MPFR_RNDN);
}

double Ival::rad_d() const {
    Ival r = rad();
    return mpfr_get_d(r.hi_, MPFR_RNDU);
}

bool Ival::radius_within(int digits) const {
    mpfr_t bound;
    mpfr_init2(bound, 64);
    mpfr_set_ui(bound, 10, MPFR_RNDD);
    mpfr_pow_si(bound, bound, -(digits - kGuardDigits), MPFR_RNDD);
    Ival r = rad();
    bool ok = mpfr_cmp(r.hi(), bound) <= 0;
    mpfr_clear(bound);
    return ok;
}

std::pair<std::string, long> Ival::mid_decimal(size_t ndigits) const {
    Ival m = mid();
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, ndigits, m.lo_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    return {digits, static_cast<long>(e)};
}

std::string Ival::str(size_t ndigits) const {
    auto [d, e] = mid_decimal(ndigits);
    std::string sign;
    if (!d.empty() && d[0] == '-') {
        sign = "-";
        d = d.substr(1);
    }
    std::string out = sign + "0." + d + "e" + std::to_string(e);
    char buf[64];
    snprintf(buf, sizeof(buf), " (+/- %.2e)", rad_d());
    return out + buf;
}

Cplx Cplx::pow_ui(unsigned long n) const {
    Cplx base = *this;
    Cplx acc(Ival::from_si(1, re.prec()), Ival::from_si(0, re.prec()));
    while (n > 0) {
        if (n & 1UL) acc = acc * base;
        base = base * base;
        n >>= 1UL;
    }
    return acc;
}

}  // namespace padrep
