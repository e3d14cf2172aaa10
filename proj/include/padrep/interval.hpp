#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "padrep/errors.hpp"
#include "padrep/precision.hpp"

namespace padrep {

/// Certified real enclosure [lo, hi] at a fixed mpfr precision. All
/// operations round the endpoints outward, so the true value of any
/// expression built from enclosed inputs stays inside the result.
/// Midpoint and radius views are provided for reporting and for the
/// error-radius contract of PrecisionContext.
class Ival {
  public:
    explicit Ival(mpfr_prec_t prec = 128);
    Ival(const Ival& o);
    Ival(Ival&& o) noexcept;
    Ival& operator=(const Ival& o);
    Ival& operator=(Ival&& o) noexcept;
    ~Ival();

    static Ival from_si(long v, mpfr_prec_t prec);
    static Ival from_mpz(const mpz_class& v, mpfr_prec_t prec);
    /// Decimal string, rounded outward to one ulp.
    static Ival from_str(const std::string& s, mpfr_prec_t prec);
    /// Exact double (no rounding).
    static Ival from_double(double v, mpfr_prec_t prec);
    static Ival from_endpoints_copy(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);

    [[nodiscard]] mpfr_prec_t prec() const { return prec_; }
    [[nodiscard]] mpfr_srcptr lo() const { return lo_; }
    [[nodiscard]] mpfr_srcptr hi() const { return hi_; }

    friend Ival operator+(const Ival& a, const Ival& b);
    friend Ival operator-(const Ival& a, const Ival& b);
    friend Ival operator*(const Ival& a, const Ival& b);
    friend Ival operator/(const Ival& a, const Ival& b);
    friend Ival operator-(const Ival& a);
    friend Ival operator+(const Ival& a, long b);
    friend Ival operator-(const Ival& a, long b);
    friend Ival operator-(long a, const Ival& b);
    friend Ival operator*(const Ival& a, long b);
    friend Ival operator/(const Ival& a, long b);
    friend Ival operator/(long a, const Ival& b);

    Ival& operator+=(const Ival& b) { return *this = *this + b; }
    Ival& operator-=(const Ival& b) { return *this = *this - b; }
    Ival& operator*=(const Ival& b) { return *this = *this * b; }
    Ival& operator/=(const Ival& b) { return *this = *this / b; }

    friend Ival sqrt(const Ival& x);
    friend Ival cbrt(const Ival& x);
    friend Ival log(const Ival& x);   // requires x certainly positive
    friend Ival exp(const Ival& x);
    friend Ival abs(const Ival& x);
    friend Ival sqr(const Ival& x);
    /// x^n for x certainly positive (monotone endpoint powering).
    friend Ival pow_si(const Ival& x, long n);

    friend Ival mul_mpz(const Ival& a, const mpz_class& z);
    friend Ival div_mpz(const Ival& a, const mpz_class& z);

    [[nodiscard]] bool contains_zero() const;
    [[nodiscard]] bool certainly_positive() const;
    [[nodiscard]] bool certainly_negative() const;
    [[nodiscard]] bool certainly_lt(const Ival& o) const;
    [[nodiscard]] bool certainly_le(const Ival& o) const;
    [[nodiscard]] bool contains(const Ival& o) const;
    [[nodiscard]] bool overlaps(const Ival& o) const;
    [[nodiscard]] Ival intersect(const Ival& o) const;  // throws DomainError if disjoint
    [[nodiscard]] bool contains_mpz(const mpz_class& z) const;

    /// True iff floor(lo) == floor(hi); the unique floor is stored in out.
    bool floor_unique(mpz_class& out) const;
    /// Integer nearest to the midpoint.
    [[nodiscard]] mpz_class round_mid() const;
    /// Enclosure of the distance to the nearest integer, ||x||.
    [[nodiscard]] Ival dist_to_nearest_int() const;

    [[nodiscard]] Ival mid() const;
    /// Upper bound on the radius (hi - lo) / 2 as a point interval.
    [[nodiscard]] Ival rad() const;
    [[nodiscard]] double mid_d() const;
    [[nodiscard]] double rad_d() const;

    /// True iff the radius is at most 10^(-digits + kGuardDigits).
    [[nodiscard]] bool radius_within(int digits) const;

    /// Midpoint as "0.<digits> * 10^exp"; returns {digits, exp}.
    [[nodiscard]] std::pair<std::string, long> mid_decimal(size_t ndigits) const;
    /// Short human-readable form "mid ~ radius".
    [[nodiscard]] std::string str(size_t ndigits = 20) const;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
    friend class Cplx;
};

/// Rectangular complex enclosure.
class Cplx {
  public:
    Ival re, im;

    Cplx() = default;
    Cplx(Ival r, Ival i) : re(std::move(r)), im(std::move(i)) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Ival n = sqr(b.re) + sqr(b.im);
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend Cplx operator+(const Cplx& a, const Ival& b) { return {a.re + b, a.im}; }
    friend Cplx operator-(const Cplx& a, const Ival& b) { return {a.re - b, a.im}; }
    friend Cplx operator-(const Ival& a, const Cplx& b) { return {a - b.re, -b.im}; }
    friend Cplx operator*(const Cplx& a, const Ival& b) { return {a.re * b, a.im * b}; }

    [[nodiscard]] Cplx conj() const { return {re, -im}; }
    [[nodiscard]] Ival abs2() const { return sqr(re) + sqr(im); }
    [[nodiscard]] Ival abs() const { return sqrt(abs2()); }
    [[nodiscard]] Cplx pow_ui(unsigned long n) const;
};

}  // namespace padrep
