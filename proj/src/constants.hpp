#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ball.hpp"
#include "rational.hpp"

namespace piforge {

enum class AtomTag { Pi, SqrtRat, RootRat, NestedSurd, Zeta3, CatalanG, DirichletK, LogRat };

// One closed-form constant: pi, sqrt(r), root(r,n), surd(a,b,c) = sqrt(a+b*sqrt(c)),
// zeta(3), Catalan's G, the Dirichlet constant K = L(2, chi_-3), or log(r).
struct ConstAtom {
    AtomTag tag = AtomTag::Pi;
    Rat r;                // SqrtRat / RootRat / LogRat argument
    unsigned long n = 0;  // RootRat index (>= 2)
    Rat a, b, c;          // NestedSurd: sqrt(a + b*sqrt(c))

    static ConstAtom pi();
    static ConstAtom sqrt_rat(const Rat& r);
    static ConstAtom root_rat(const Rat& r, unsigned long n);
    static ConstAtom nested_surd(const Rat& a, const Rat& b, const Rat& c);
    static ConstAtom zeta3();
    static ConstAtom catalan_g();
    static ConstAtom dirichlet_k();
    static ConstAtom log_rat(const Rat& r);

    bool operator==(const ConstAtom& o) const;
    bool operator<(const ConstAtom& o) const; // canonical ordering
    std::string str() const;
};

// Product of atom powers, exponents nonzero, atoms strictly increasing.
struct ConstMonomial {
    std::vector<std::pair<ConstAtom, int>> powers;

    bool operator==(const ConstMonomial& o) const;
    bool operator<(const ConstMonomial& o) const;
    bool empty() const { return powers.empty(); }
    std::string str() const; // "" for the empty monomial
};

// Rational linear combination of monomials (normal form: monomials sorted,
// distinct, nonzero coefficients; even powers of square roots folded into
// the coefficients).
struct ConstExpr {
    std::vector<std::pair<Rat, ConstMonomial>> terms;

    static ConstExpr zero() { return ConstExpr{}; }
    static ConstExpr constant(const Rat& q);
    static ConstExpr atom_power(const ConstAtom& a, int exp, const Rat& coef = Rat(1));

    ConstExpr operator+(const ConstExpr& o) const;
    ConstExpr operator-(const ConstExpr& o) const;
    ConstExpr scaled(const Rat& s) const;
    bool operator==(const ConstExpr& o) const;

    bool is_zero() const { return terms.empty(); }
    bool is_rational() const; // zero or a single empty-monomial term
    void normalize();
    std::string str() const;
};

// Parse "(-1/12) * pi^-1", "3264/63 - 4/63*pi^2", "16/3*pi^-1 + 2072/375*sqrt(5)*pi^-1".
ConstExpr parse_const_expr(const std::string& text);

// Certified enclosure of one atom; memoized per (atom, prec). Every atom is
// evaluated with guard bits so the radius sits well below 2^-prec.
Ball atom_eval(const ConstAtom& atom, mpfr_prec_t prec);

// Second, algorithmically independent route for each transcendental atom
// (never used in production evaluation; the test suite checks overlap).
Ball atom_eval_alt(const ConstAtom& atom, mpfr_prec_t prec);

Ball const_eval(const ConstExpr& expr, mpfr_prec_t prec);

Ball dirichlet_k_value(mpfr_prec_t prec);

// Exact Bernoulli number B_n (B_1 = -1/2), cached.
Rat bernoulli(unsigned long n);

// Decimal digits -> working precision in bits, with guard.
mpfr_prec_t digits_to_prec(long digits);

} // namespace piforge
