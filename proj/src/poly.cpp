#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace piforge {

Poly::Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(long c) {
    if (c != 0) c_.push_back(Rat(c));
}

Poly Poly::var() {
    Poly p;
    p.c_ = {Rat(0), Rat(1)};
    return p;
}

Poly Poly::monomial(const Rat& c, int deg) {
    Poly p;
    if (c != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = c;
    }
    return p;
}

Poly Poly::from_coeffs(std::vector<Rat> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return Rat(0);
    return c_[i];
}

Rat Poly::leading() const {
    require(!is_zero(), "leading coefficient of zero polynomial");
    return c_.back();
}

Rat Poly::operator()(const Rat& x) const {
    Rat r(0);
    for (int i = (int)c_.size() - 1; i >= 0; --i) r = r * x + c_[i];
    return r;
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly p;
    p.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < p.c_.size(); ++i) p.c_[i] = coeff((int)i) + o.coeff((int)i);
    p.trim();
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly p;
    p.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) p.c_[i + j] += c_[i] * o.c_[j];
    p.trim();
    return p;
}

Poly Poly::operator*(const Rat& s) const {
    if (s == 0) return Poly();
    Poly p(*this);
    for (auto& c : p.c_) c *= s;
    return p;
}

Poly Poly::derivative() const {
    Poly p;
    for (int i = 1; i < (int)c_.size(); ++i) p.c_.push_back(c_[i] * Rat(i));
    p.trim();
    return p;
}

Poly Poly::shifted(const Rat& a) const {
    // Horner in (x + a).
    Poly xa = Poly::var() + Poly(a);
    Poly r;
    for (int i = (int)c_.size() - 1; i >= 0; --i) r = r * xa + Poly(c_[i]);
    return r;
}

Poly Poly::scaled_arg(const Rat& s) const {
    Poly p(*this);
    Rat f(1);
    for (size_t i = 0; i < p.c_.size(); ++i) {
        p.c_[i] *= f;
        f *= s;
    }
    p.trim();
    return p;
}

int Poly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return (int)i;
    return -1;
}

Poly Poly::divided_by_power(int v) const {
    if (v == 0) return *this;
    require(valuation() >= v, "polynomial not divisible by x^" + std::to_string(v));
    Poly p;
    p.c_.assign(c_.begin() + v, c_.end());
    return p;
}

Rat Poly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content = rat(num_gcd, den_lcm);
    if (leading() < 0) content = -content;
    return content;
}

Poly Poly::primitive() const {
    if (is_zero()) return Poly();
    return *this * (Rat(1) / content());
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rat c = c_[i];
        if (c == 0) continue;
        bool first = out.empty();
        if (c > 0 && !first) out += "+";
        if (i == 0) {
            out += rat_string(c);
            continue;
        }
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += rat_string(c) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Poly pow(const Poly& p, unsigned e) {
    Poly r{Rat(1)};
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    require(!b.is_zero(), "polynomial division by zero");
    q = Poly();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Rat f = r.leading() / b.leading();
        Poly t = Poly::monomial(f, d);
        q = q + t;
        r = r - t * b;
    }
}

bool poly_divides(const Poly& b, const Poly& a) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    return r.is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly q, r;
        poly_divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x * (Rat(1) / x.leading()); // monic
}

namespace {

// Cauchy root bound: 1 + max |c_i / c_d|.
Rat cauchy_bound(const Poly& p) {
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat q = abs(p.coeff(i) / p.leading());
        if (q > m) m = q;
    }
    return m + 1;
}

} // namespace

std::vector<long> dispersion_shifts(const Poly& a, const Poly& b) {
    std::vector<long> shifts;
    if (a.degree() < 1 || b.degree() < 1) return shifts;
    // A common root of a(x) and b(x+h) forces h = alpha - beta with alpha a
    // root of a, beta of b, so |h| <= bound(a) + bound(b).
    Rat bound = cauchy_bound(a) + cauchy_bound(b);
    long hmax = (long)std::ceil(bound.get_d()) + 1;
    for (long h = 0; h <= hmax; ++h) {
        Poly g = poly_gcd(a, b.shifted(Rat(h)));
        if (g.degree() > 0) shifts.push_back(h);
    }
    return shifts;
}

// ---------------------------------------------------------------------------
// Expression parser.

namespace {

struct PolyParser {
    const std::string& s;
    const std::string& var;
    size_t i = 0;

    explicit PolyParser(const std::string& s_, const std::string& var_) : s(s_), var(var_) {}

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void die(const std::string& msg) {
        fail("polynomial parse error at offset " + std::to_string(i) + " in \"" + s + "\": " + msg);
    }

    Int integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (start == i) die("expected integer");
        return Int(s.substr(start, i - start));
    }

    long exponent() {
        bool neg = eat('-');
        Int e = integer();
        require(e.fits_slong_p(), "exponent too large");
        long v = e.get_si();
        return neg ? -v : v;
    }

    bool at_primary() {
        char c = peek();
        if (c == '(' || std::isdigit((unsigned char)c)) return true;
        return s.compare(i, var.size(), var) == 0;
    }

    Poly primary() {
        skip_ws();
        if (eat('(')) {
            Poly p = expr();
            if (!eat(')')) die("expected ')'");
            return p;
        }
        if (s.compare(i, var.size(), var) == 0 &&
            (i + var.size() >= s.size() || !std::isalnum((unsigned char)s[i + var.size()]))) {
            i += var.size();
            return Poly::var();
        }
        if (std::isdigit((unsigned char)peek())) return Poly(Rat(integer()));
        die("expected number, variable or '('");
    }

    Poly factor() {
        Poly p = primary();
        if (eat('^')) {
            long e = exponent();
            if (e < 0) die("negative exponent in polynomial");
            p = pow(p, (unsigned)e);
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            if (eat('*')) {
                p = p * factor();
            } else if (eat('/')) {
                Poly d = factor();
                if (d.degree() > 0) die("division by non-constant");
                if (d.is_zero()) die("division by zero");
                p = p * (Rat(1) / d.coeff(0));
            } else if (at_primary()) {
                p = p * factor(); // implicit multiplication
            } else {
                break;
            }
        }
        return p;
    }

    Poly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                break;
        }
        return p;
    }

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (i != s.size()) die("trailing input");
        return p;
    }
};

} // namespace

Poly parse_poly(const std::string& text, const std::string& var) {
    PolyParser parser(text, var);
    return parser.parse();
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Poly num, Poly den) {
    require(!den.is_zero(), "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        Poly q, r;
        poly_divmod(num, g, q, r);
        num = q;
        poly_divmod(den, g, q, r);
        den = q;
    }
    Rat c = den.content();
    num_ = num * (Rat(1) / c);
    den_ = den * (Rat(1) / c);
}

Rat RationalFunction::operator()(const Rat& x) const {
    Rat d = den_(x);
    require(d != 0, "rational function pole at " + rat_string(x));
    return num_(x) / d;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    require(!o.is_zero(), "division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Poly(Rat(1))) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace piforge
