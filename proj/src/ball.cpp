#include "ball.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "util.hpp"

namespace piforge {

// ---------------------------------------------------------------------------
// Real

Real::Real(mpfr_prec_t prec) {
    require(prec >= MPFR_PREC_MIN, "Real: precision too small");
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Rat Real::to_rat() const {
    if (mpfr_zero_p(v_)) return Rat(0);
    require(mpfr_number_p(v_), "Real::to_rat: not a finite number");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    Rat q(m);
    if (e >= 0) {
        mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), (mp_bitcnt_t)e);
    } else {
        Rat d(1);
        mpz_mul_2exp(d.get_den_mpz_t(), d.get_den_mpz_t(), (mp_bitcnt_t)(-e));
        q *= d;
    }
    q.canonicalize();
    return q;
}

std::string Real::str(size_t digits) const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%%.%zuRNg", digits);
    char* out = nullptr;
    mpfr_asprintf(&out, buf, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

// ---------------------------------------------------------------------------
// Ball

namespace {

// 1 ulp of x at its own precision, as a safe upper bound: 2^(exp - prec + 1).
// For x = 0 the midpoint rounding error is zero (MPFR underflow cannot occur
// at these exponent ranges).
void ulp_bound(mpfr_ptr out, mpfr_srcptr x) {
    if (mpfr_zero_p(x)) {
        mpfr_set_zero(out, 1);
        return;
    }
    mpfr_exp_t e = mpfr_get_exp(x);
    mpfr_set_ui_2exp(out, 1, e - mpfr_get_prec(x) + 1, MPFR_RNDU);
}

} // namespace

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {}

void Ball::bump_ulp(int ternary) {
    if (ternary == 0) return;
    mpfr_t u;
    mpfr_init2(u, kRadPrec);
    ulp_bound(u, mid_.get());
    mpfr_add(rad_.get(), rad_.get(), u, MPFR_RNDU);
    mpfr_clear(u);
}

Ball Ball::from_rat(const Rat& q, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN);
    b.bump_ulp(t);
    return b;
}

Ball Ball::from_int(long v, mpfr_prec_t prec) {
    Ball b(prec);
    int t = mpfr_set_si(b.mid_.get(), v, MPFR_RNDN);
    b.bump_ulp(t);
    return b;
}

bool Ball::contains_zero() const {
    mpfr_t a;
    mpfr_init2(a, kRadPrec);
    mpfr_abs(a, mid_.get(), MPFR_RNDD); // lower bound on |mid|
    bool out = mpfr_cmp(a, rad_.get()) <= 0;
    mpfr_clear(a);
    return out;
}

bool Ball::contains(const Rat& q) const {
    Rat d = mid_rat() - q;
    if (d < 0) d = -d;
    return d <= rad_upper();
}

bool Ball::overlaps(const Ball& o) const {
    Rat d = mid_rat() - o.mid_rat();
    if (d < 0) d = -d;
    return d <= rad_upper() + o.rad_upper();
}

Rat Ball::rad_upper() const {
    if (rad_.is_zero()) return Rat(0);
    return rad_.to_rat(); // radius ops all round up, so this is the bound
}

bool Ball::radius_below_pow10(long digits) const {
    if (rad_.is_zero()) return true;
    Rat bound = rat_pow(Rat(1, 10), digits);
    return rad_upper() < bound;
}

long Ball::certified_digits() const {
    if (rad_.is_zero()) return 1000000;
    Rat r = rad_upper();
    if (r >= 1) return 0;
    long lo = 0, hi = 1;
    while (r < rat_pow(Rat(1, 10), hi)) {
        lo = hi;
        hi *= 2;
        if (hi > 1000000) return 1000000;
    }
    // invariant: r < 10^-lo, r >= 10^-hi
    while (hi - lo > 1) {
        long m = lo + (hi - lo) / 2;
        if (r < rat_pow(Rat(1, 10), m))
            lo = m;
        else
            hi = m;
    }
    return lo;
}

Ball Ball::operator-() const {
    Ball out(prec());
    mpfr_neg(out.mid_.get(), mid_.get(), MPFR_RNDN); // exact
    mpfr_set(out.rad_.get(), rad_.get(), MPFR_RNDU);
    return out;
}

Ball Ball::operator+(const Ball& o) const {
    Ball out(std::max(prec(), o.prec()));
    int t = mpfr_add(out.mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(out.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    out.bump_ulp(t);
    return out;
}

Ball Ball::operator-(const Ball& o) const {
    Ball out(std::max(prec(), o.prec()));
    int t = mpfr_sub(out.mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(out.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    out.bump_ulp(t);
    return out;
}

Ball Ball::operator*(const Ball& o) const {
    Ball out(std::max(prec(), o.prec()));
    int t = mpfr_mul(out.mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);

    // rad = |a|*rb + |b|*ra + ra*rb, every step rounded up
    mpfr_t aa, bb, term, acc;
    mpfr_init2(aa, kRadPrec);
    mpfr_init2(bb, kRadPrec);
    mpfr_init2(term, kRadPrec);
    mpfr_init2(acc, kRadPrec);
    mpfr_abs(aa, mid_.get(), MPFR_RNDU);
    mpfr_abs(bb, o.mid_.get(), MPFR_RNDU);
    mpfr_mul(acc, aa, o.rad_.get(), MPFR_RNDU);
    mpfr_mul(term, bb, rad_.get(), MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    mpfr_mul(term, rad_.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    mpfr_set(out.rad_.get(), acc, MPFR_RNDU);
    mpfr_clear(aa);
    mpfr_clear(bb);
    mpfr_clear(term);
    mpfr_clear(acc);

    out.bump_ulp(t);
    return out;
}

Ball Ball::operator/(const Ball& o) const {
    require(!o.contains_zero(), "Ball division by an interval containing zero");
    Ball out(std::max(prec(), o.prec()));
    int t = mpfr_div(out.mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);

    // For b in [B-rb, B+rb] excluding zero: |a/b - A/B| <= (ra*|B| + rb*|A|)
    // / (|B| * (|B| - rb)); all factors bounded in the conservative direction.
    mpfr_t Au, Bu, Bd, denom, num, term;
    mpfr_init2(Au, kRadPrec);
    mpfr_init2(Bu, kRadPrec);
    mpfr_init2(Bd, kRadPrec);
    mpfr_init2(denom, kRadPrec);
    mpfr_init2(num, kRadPrec);
    mpfr_init2(term, kRadPrec);
    mpfr_abs(Au, mid_.get(), MPFR_RNDU);
    mpfr_abs(Bu, o.mid_.get(), MPFR_RNDU);
    mpfr_abs(Bd, o.mid_.get(), MPFR_RNDD);
    mpfr_sub(denom, Bd, o.rad_.get(), MPFR_RNDD); // |B| - rb, rounded down
    require(mpfr_sgn(denom) > 0, "Ball division: divisor too close to zero");
    mpfr_mul(denom, denom, Bd, MPFR_RNDD);
    mpfr_mul(num, rad_.get(), Bu, MPFR_RNDU);
    mpfr_mul(term, o.rad_.get(), Au, MPFR_RNDU);
    mpfr_add(num, num, term, MPFR_RNDU);
    mpfr_div(out.rad_.get(), num, denom, MPFR_RNDU);
    mpfr_clear(Au);
    mpfr_clear(Bu);
    mpfr_clear(Bd);
    mpfr_clear(denom);
    mpfr_clear(num);
    mpfr_clear(term);

    out.bump_ulp(t);
    return out;
}

Ball Ball::abs() const {
    Ball out(prec());
    mpfr_abs(out.mid_.get(), mid_.get(), MPFR_RNDN); // exact
    mpfr_set(out.rad_.get(), rad_.get(), MPFR_RNDU);
    return out;
}

Ball Ball::sqrt() const {
    // lo = mid - rad must be >= 0 so the whole interval is in the domain
    mpfr_t lo;
    mpfr_init2(lo, kRadPrec);
    mpfr_sub(lo, mid_.get(), rad_.get(), MPFR_RNDD);
    require(mpfr_sgn(lo) >= 0, "Ball::sqrt of interval with negative part");

    Ball out(prec());
    int t = mpfr_sqrt(out.mid_.get(), mid_.get(), MPFR_RNDN);

    if (!rad_.is_zero()) {
        // |sqrt(x) - sqrt(mid)| <= rad / (sqrt(lo) + sqrt(mid)) <= rad / sqrt(lo)
        // when lo > 0; if lo == 0 use sqrt(rad_upper * 2) as a crude bound via
        // |sqrt(x)-sqrt(mid)| <= sqrt(2*rad).
        if (mpfr_sgn(lo) > 0) {
            mpfr_t s;
            mpfr_init2(s, kRadPrec);
            mpfr_sqrt(s, lo, MPFR_RNDD);
            mpfr_div(out.rad_.get(), rad_.get(), s, MPFR_RNDU);
            mpfr_clear(s);
        } else {
            mpfr_t r2;
            mpfr_init2(r2, kRadPrec);
            mpfr_mul_ui(r2, rad_.get(), 2, MPFR_RNDU);
            mpfr_sqrt(out.rad_.get(), r2, MPFR_RNDU);
            mpfr_clear(r2);
        }
    }
    mpfr_clear(lo);
    out.bump_ulp(t);
    return out;
}

Ball Ball::root(unsigned long n) const {
    require(n >= 1, "Ball::root: n must be >= 1");
    if (n == 1) return *this;
    if (n == 2) return sqrt();

    mpfr_t lo;
    mpfr_init2(lo, kRadPrec);
    mpfr_sub(lo, mid_.get(), rad_.get(), MPFR_RNDD);
    require(mpfr_sgn(lo) > 0, "Ball::root needs a strictly positive interval");

    Ball out(prec());
    int t = mpfr_rootn_ui(out.mid_.get(), mid_.get(), n, MPFR_RNDN);

    if (!rad_.is_zero()) {
        // mean value: |x^(1/n) - m^(1/n)| <= rad * (1/n) * lo^(1/n - 1)
        //           = rad * lo^(1/n) / (n * lo)
        mpfr_t r, s;
        mpfr_init2(r, kRadPrec);
        mpfr_init2(s, kRadPrec);
        mpfr_rootn_ui(s, lo, n, MPFR_RNDU);
        mpfr_mul(r, rad_.get(), s, MPFR_RNDU);
        mpfr_t den;
        mpfr_init2(den, kRadPrec);
        mpfr_mul_ui(den, lo, n, MPFR_RNDD);
        mpfr_div(out.rad_.get(), r, den, MPFR_RNDU);
        mpfr_clear(r);
        mpfr_clear(s);
        mpfr_clear(den);
    }
    mpfr_clear(lo);
    out.bump_ulp(t);
    return out;
}

Ball Ball::pow_int(long e) const {
    if (e == 0) return from_int(1, prec());
    if (e < 0) return from_int(1, prec()) / pow_int(-e);
    Ball acc = from_int(1, prec());
    Ball base = *this;
    unsigned long u = (unsigned long)e;
    while (u) {
        if (u & 1) acc = acc * base;
        u >>= 1;
        if (u) base = base * base;
    }
    return acc;
}

Ball Ball::mul_2exp(long e) const {
    Ball out(prec());
    mpfr_mul_2si(out.mid_.get(), mid_.get(), e, MPFR_RNDN); // exact
    mpfr_mul_2si(out.rad_.get(), rad_.get(), e, MPFR_RNDU);
    return out;
}

void Ball::add_error(const Rat& bound) {
    require(bound >= 0, "Ball::add_error: negative bound");
    if (bound == 0) return;
    mpfr_t b;
    mpfr_init2(b, kRadPrec);
    mpfr_set_q(b, bound.get_mpq_t(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), b, MPFR_RNDU);
    mpfr_clear(b);
}

void Ball::add_error_ball(const Ball& bound) {
    mpfr_t b;
    mpfr_init2(b, kRadPrec);
    mpfr_abs(b, bound.mid_.get(), MPFR_RNDU);
    mpfr_add(b, b, bound.rad_.get(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), b, MPFR_RNDU);
    mpfr_clear(b);
}

std::string Ball::str(size_t digits) const {
    std::string s = "[" + mid_.str(digits);
    if (rad_.is_zero()) {
        s += " +/- 0]";
    } else {
        s += " +/- " + rad_.str(3) + "]";
    }
    return s;
}

Ball Ball::from_interval(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
    require(lo <= hi, "Ball::from_interval: lo > hi");
    Ball b = from_rat((lo + hi) / 2, prec);
    b.add_error((hi - lo) / 2);
    return b;
}

} // namespace piforge
