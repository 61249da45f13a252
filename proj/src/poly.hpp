#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace piforge {

// Dense univariate polynomial over Q. Coefficient i belongs to x^i; the
// representation never carries trailing zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c);
    explicit Poly(long c);
    static Poly var();
    static Poly monomial(const Rat& c, int deg);
    static Poly from_coeffs(std::vector<Rat> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; } // -1 for the zero polynomial
    Rat coeff(int i) const;
    Rat leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat operator()(const Rat& x) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Poly shifted(const Rat& a) const; // p(x + a)
    Poly scaled_arg(const Rat& s) const; // p(s * x)

    int valuation() const; // lowest index with nonzero coefficient; -1 for zero
    Poly divided_by_power(int v) const;

    // Signed content: gcd of numerators / lcm of denominators, carrying the
    // sign of the leading coefficient. primitive() divides it out, giving
    // coprime integer coefficients with positive leading coefficient.
    Rat content() const;
    Poly primitive() const;

    std::string str(const std::string& var = "k") const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly pow(const Poly& p, unsigned e);

// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
bool poly_divides(const Poly& b, const Poly& a); // b | a
Poly poly_gcd(const Poly& a, const Poly& b);     // monic (or integer-primitive of a monic)

// All integer shifts h >= 0 such that gcd(a(x), b(x + h)) is nonconstant.
std::vector<long> dispersion_shifts(const Poly& a, const Poly& b);

// Parse "+ - * / ^ ( )" polynomial expressions over the named variable with
// rational literals and implicit multiplication ("6k+1", "(2k+1)^2(3k+1)").
// Division is only allowed by constants.
Poly parse_poly(const std::string& text, const std::string& var = "k");

// Rational function num/den over Q, normalized: gcd(num, den) = 1 and den
// integer-primitive with positive leading coefficient.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rat(1)) {}
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rat operator()(const Rat& x) const; // den(x) must be nonzero

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str(const std::string& var = "k") const;

private:
    Poly num_, den_;
};

} // namespace piforge
