#pragma once

#include <gmpxx.h>

#include <string>

#include "util.hpp"

namespace piforge {

using Int = mpz_class;
using Rat = mpq_class; // gmpxx keeps values canonical: reduced, denominator > 0

inline Rat rat(long num, long den = 1) {
    require(den != 0, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    require(den != 0, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Division that surfaces division by zero as a library error instead of UB.
inline Rat checked_div(const Rat& a, const Rat& b) {
    require(b != 0, "division by zero");
    return a / b;
}

Rat parse_rat(const std::string& text);
std::string rat_string(const Rat& q);

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, long e); // negative e inverts; base must be nonzero then

// C(n, k) with the out-of-range convention used by the sequence definitions:
// any k < 0, n < 0 or k > n yields 0.
Int binomial(const Int& n, const Int& k);
Int factorial(unsigned long n);

// Deterministic primality at desk scale (trial division).
bool is_prime(const Int& n);

// Inverse of a mod m (gcd(a, m) must be 1).
Int mod_inverse(const Int& a, const Int& m);

// Reduce a rational mod m: num * den^-1 mod m, result in [0, m).
Int rat_mod(const Rat& q, const Int& m);

} // namespace piforge
