#pragma once

#include <mpfr.h>

#include <string>

#include "rational.hpp"

namespace piforge {

// Arbitrary-precision dyadic float wrapper. Value = mantissa * 2^exp as held
// by MPFR; every operation states its rounding mode explicitly.
class Real {
public:
    explicit Real(mpfr_prec_t prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    Rat to_rat() const; // exact (dyadic) value

    std::string str(size_t digits) const;

private:
    mpfr_t v_;
};

// Certified enclosure [mid - rad, mid + rad]. Midpoints are computed at the
// ball's precision with round-to-nearest; the radius lives at a small fixed
// precision and every radius operation rounds up, so the interval always
// contains the exact result (containment contract).
class Ball {
public:
    static constexpr mpfr_prec_t kRadPrec = 32;

    explicit Ball(mpfr_prec_t prec);
    static Ball from_rat(const Rat& q, mpfr_prec_t prec);
    static Ball from_int(long v, mpfr_prec_t prec);
    static Ball zero(mpfr_prec_t prec) { return from_int(0, prec); }
    // Enclosure of the exact interval [lo, hi] (endpoints included).
    static Ball from_interval(const Rat& lo, const Rat& hi, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mid_.prec(); }
    const Real& mid() const { return mid_; }
    const Real& rad() const { return rad_; }

    bool is_exact() const { return rad_.is_zero(); }
    bool contains_zero() const;
    bool contains(const Rat& q) const;
    bool overlaps(const Ball& o) const;

    Rat mid_rat() const { return mid_.to_rat(); }
    Rat rad_upper() const; // exact dyadic upper bound on the radius
    Rat lower() const { return mid_rat() - rad_upper(); }
    Rat upper() const { return mid_rat() + rad_upper(); }

    // radius < 10^-digits (exact comparison)
    bool radius_below_pow10(long digits) const;
    // floor(-log10(radius)), i.e. certified correct decimal digits; large cap
    // when the ball is exact.
    long certified_digits() const;

    Ball operator-() const;
    Ball operator+(const Ball& o) const;
    Ball operator-(const Ball& o) const;
    Ball operator*(const Ball& o) const;
    Ball operator/(const Ball& o) const; // o must exclude zero
    Ball abs() const;

    Ball sqrt() const;        // ball must contain no negative number
    Ball root(unsigned long n) const; // n-th root, same domain rule for even n
    Ball pow_int(long e) const;
    Ball mul_2exp(long e) const;

    // Grow the radius by an exact rational bound (used for truncation tails).
    void add_error(const Rat& bound);
    void add_error_ball(const Ball& bound); // adds |bound.mid| + bound.rad

    std::string str(size_t digits = 20) const;

private:
    void bump_ulp(int ternary);
    Real mid_;
    Real rad_;
};

} // namespace piforge
