#include "rational.hpp"

#include <algorithm>

namespace piforge {

Rat parse_rat(const std::string& text) {
    std::string s = text;
    s.erase(remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    require(!s.empty(), "empty rational literal");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        fail("bad rational literal: " + text);
    require(q.get_den() != 0, "rational literal with zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rat_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    unsigned long a = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Int num = int_pow(base.get_num(), a);
    Int den = int_pow(base.get_den(), a);
    if (e < 0) {
        require(num != 0, "zero base raised to negative power");
        std::swap(num, den);
    }
    return rat(num, den);
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    require(n.fits_ulong_p(), "binomial argument too large");
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), k.get_ui());
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    require(n.fits_ulong_p(), "primality check beyond desk scale");
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    require(ok != 0, "no modular inverse: gcd(" + a.get_str() + ", " + m.get_str() + ") != 1");
    return r;
}

Int rat_mod(const Rat& q, const Int& m) {
    require(m > 0, "modulus must be positive");
    Int num = q.get_num() % m;
    if (num < 0) num += m;
    Int inv = mod_inverse(q.get_den() % m, m);
    return (num * inv) % m;
}

} // namespace piforge
