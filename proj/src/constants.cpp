#include "constants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "binsplit.hpp"
#include "util.hpp"

namespace piforge {

// ---------------------------------------------------------------------------
// ConstAtom

ConstAtom ConstAtom::pi() { return ConstAtom{}; }

ConstAtom ConstAtom::sqrt_rat(const Rat& r) {
    require(r > 0, "sqrt atom needs a positive argument");
    ConstAtom a;
    a.tag = AtomTag::SqrtRat;
    a.r = r;
    return a;
}

ConstAtom ConstAtom::root_rat(const Rat& r, unsigned long n) {
    require(r > 0, "root atom needs a positive argument");
    require(n >= 2, "root atom needs index >= 2");
    ConstAtom a;
    a.tag = AtomTag::RootRat;
    a.r = r;
    a.n = n;
    return a;
}

ConstAtom ConstAtom::nested_surd(const Rat& aa, const Rat& bb, const Rat& cc) {
    require(cc > 0, "surd atom needs c > 0");
    ConstAtom a;
    a.tag = AtomTag::NestedSurd;
    a.a = aa;
    a.b = bb;
    a.c = cc;
    return a;
}

ConstAtom ConstAtom::zeta3() {
    ConstAtom a;
    a.tag = AtomTag::Zeta3;
    return a;
}

ConstAtom ConstAtom::catalan_g() {
    ConstAtom a;
    a.tag = AtomTag::CatalanG;
    return a;
}

ConstAtom ConstAtom::dirichlet_k() {
    ConstAtom a;
    a.tag = AtomTag::DirichletK;
    return a;
}

ConstAtom ConstAtom::log_rat(const Rat& r) {
    require(r > 0, "log atom needs a positive argument");
    ConstAtom a;
    a.tag = AtomTag::LogRat;
    a.r = r;
    return a;
}

bool ConstAtom::operator==(const ConstAtom& o) const {
    return tag == o.tag && r == o.r && n == o.n && a == o.a && b == o.b && c == o.c;
}

bool ConstAtom::operator<(const ConstAtom& o) const {
    if (tag != o.tag) return (int)tag < (int)o.tag;
    if (r != o.r) return r < o.r;
    if (n != o.n) return n < o.n;
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
}

std::string ConstAtom::str() const {
    switch (tag) {
    case AtomTag::Pi: return "pi";
    case AtomTag::SqrtRat: return "sqrt(" + rat_string(r) + ")";
    case AtomTag::RootRat: return "root(" + rat_string(r) + "," + std::to_string(n) + ")";
    case AtomTag::NestedSurd:
        return "surd(" + rat_string(a) + "," + rat_string(b) + "," + rat_string(c) + ")";
    case AtomTag::Zeta3: return "zeta3";
    case AtomTag::CatalanG: return "G";
    case AtomTag::DirichletK: return "K";
    case AtomTag::LogRat: return "log(" + rat_string(r) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// ConstMonomial / ConstExpr

bool ConstMonomial::operator==(const ConstMonomial& o) const { return powers == o.powers; }

bool ConstMonomial::operator<(const ConstMonomial& o) const {
    size_t n = std::min(powers.size(), o.powers.size());
    for (size_t i = 0; i < n; i++) {
        if (!(powers[i].first == o.powers[i].first))
            return powers[i].first < o.powers[i].first;
        if (powers[i].second != o.powers[i].second)
            return powers[i].second < o.powers[i].second;
    }
    return powers.size() < o.powers.size();
}

std::string ConstMonomial::str() const {
    std::string s;
    for (size_t i = 0; i < powers.size(); i++) {
        if (i) s += "*";
        s += powers[i].first.str();
        if (powers[i].second != 1) s += "^" + std::to_string(powers[i].second);
    }
    return s;
}

ConstExpr ConstExpr::constant(const Rat& q) {
    ConstExpr e;
    if (q != 0) e.terms.push_back({q, ConstMonomial{}});
    return e;
}

ConstExpr ConstExpr::atom_power(const ConstAtom& a, int exp, const Rat& coef) {
    ConstExpr e;
    ConstMonomial m;
    if (exp != 0) m.powers.push_back({a, exp});
    e.terms.push_back({coef, m});
    e.normalize();
    return e;
}

ConstExpr ConstExpr::operator+(const ConstExpr& o) const {
    ConstExpr e;
    e.terms = terms;
    e.terms.insert(e.terms.end(), o.terms.begin(), o.terms.end());
    e.normalize();
    return e;
}

ConstExpr ConstExpr::operator-(const ConstExpr& o) const { return *this + o.scaled(Rat(-1)); }

ConstExpr ConstExpr::scaled(const Rat& s) const {
    ConstExpr e = *this;
    for (auto& t : e.terms) t.first *= s;
    e.normalize();
    return e;
}

bool ConstExpr::operator==(const ConstExpr& o) const { return terms == o.terms; }

bool ConstExpr::is_rational() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && terms[0].second.empty();
}

namespace {

// exact square root of a rational if it is a perfect square
bool rat_exact_sqrt(const Rat& r, Rat& out) {
    if (r < 0) return false;
    const Int num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rat(sn, sd);
    return true;
}

} // namespace

void ConstExpr::normalize() {
    std::vector<std::pair<Rat, ConstMonomial>> work = std::move(terms);
    terms.clear();
    std::map<ConstMonomial, Rat> acc;

    while (!work.empty()) {
        Rat coef = std::move(work.back().first);
        ConstMonomial mono = std::move(work.back().second);
        work.pop_back();
        if (coef == 0) continue;

        // combine duplicate atoms
        std::sort(mono.powers.begin(), mono.powers.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<ConstAtom, int>> combined;
        for (auto& p : mono.powers) {
            if (!combined.empty() && combined.back().first == p.first)
                combined.back().second += p.second;
            else
                combined.push_back(p);
        }

        // fold even powers of radicals into the coefficient
        ConstMonomial out;
        bool redispatched = false;
        for (size_t i = 0; i < combined.size() && !redispatched; i++) {
            ConstAtom atom = combined[i].first;
            int e = combined[i].second;
            if (e == 0) continue;
            switch (atom.tag) {
            case AtomTag::SqrtRat: {
                while (e >= 2) {
                    coef *= atom.r;
                    e -= 2;
                }
                while (e <= -2) {
                    coef /= atom.r;
                    e += 2;
                }
                Rat rt;
                if (e != 0 && rat_exact_sqrt(atom.r, rt)) {
                    // sqrt of a perfect square is rational
                    if (e == 1)
                        coef *= rt;
                    else
                        coef /= rt;
                    e = 0;
                }
                if (e != 0) out.powers.push_back({atom, e});
                break;
            }
            case AtomTag::RootRat: {
                long nn = (long)atom.n;
                while (e >= nn) {
                    coef *= atom.r;
                    e -= nn;
                }
                while (e <= -nn) {
                    coef /= atom.r;
                    e += nn;
                }
                if (e != 0) out.powers.push_back({atom, e});
                break;
            }
            case AtomTag::NestedSurd: {
                if (e >= 2 || e <= -1) {
                    // surd^2 = a + b*sqrt(c);  surd^-1 = surd*(a-b*sqrt(c))/(a^2-b^2*c)
                    std::vector<std::pair<ConstAtom, int>> rest(combined.begin(),
                                                                combined.end());
                    if (e >= 2) {
                        rest[i].second = e - 2;
                        ConstMonomial m1;
                        m1.powers = rest;
                        work.push_back({coef * atom.a, m1});
                        ConstMonomial m2;
                        m2.powers = rest;
                        m2.powers.push_back({ConstAtom::sqrt_rat(atom.c), 1});
                        work.push_back({coef * atom.b, m2});
                    } else {
                        Rat den = atom.a * atom.a - atom.b * atom.b * atom.c;
                        require(den != 0, "degenerate nested surd in normalization");
                        rest[i].second = e + 1;
                        ConstMonomial m1;
                        m1.powers = rest;
                        m1.powers.push_back({atom, 1});
                        work.push_back({coef * atom.a / den, m1});
                        ConstMonomial m2;
                        m2.powers = rest;
                        m2.powers.push_back({atom, 1});
                        m2.powers.push_back({ConstAtom::sqrt_rat(atom.c), 1});
                        work.push_back({coef * atom.b / den * Rat(-1), m2});
                    }
                    redispatched = true;
                    break;
                }
                out.powers.push_back({atom, e});
                break;
            }
            default: out.powers.push_back({atom, e}); break;
            }
        }
        if (redispatched) continue;
        acc[out] += coef;
    }

    for (auto& [mono, coef] : acc)
        if (coef != 0) terms.push_back({coef, mono});
}

std::string ConstExpr::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms.size(); i++) {
        Rat c = terms[i].first;
        if (i == 0) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string mono = terms[i].second.str();
        if (mono.empty())
            s += rat_string(c);
        else if (c == 1)
            s += mono;
        else
            s += rat_string(c) + "*" + mono;
    }
    return s;
}

// ---------------------------------------------------------------------------
// ConstExpr parser

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : t_(text) {}

    ConstExpr parse() {
        ConstExpr e = ConstExpr::zero();
        skip();
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                pos_++;
                skip();
            } else {
                require(first, err("expected '+' or '-' between terms"));
            }
            first = false;
            e = e + term(sign);
            skip();
            if (pos_ >= t_.size()) break;
        }
        return e;
    }

private:
    char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
    void skip() {
        while (pos_ < t_.size() && std::isspace((unsigned char)t_[pos_])) pos_++;
    }
    std::string err(const std::string& msg) const {
        return "constant expression: " + msg + " at offset " + std::to_string(pos_) +
               " in '" + t_ + "'";
    }

    ConstExpr term(int sign) {
        Rat coef(sign);
        ConstMonomial mono;
        bool any = false;
        while (true) {
            skip();
            if (std::isdigit((unsigned char)peek())) {
                coef *= number();
            } else if (std::isalpha((unsigned char)peek())) {
                auto [atom, exp] = atom_factor();
                mono.powers.push_back({atom, exp});
            } else {
                require(any, err("expected a number or constant name"));
                break;
            }
            any = true;
            skip();
            if (peek() == '*') {
                pos_++;
                continue;
            }
            break;
        }
        ConstExpr e;
        e.terms.push_back({coef, mono});
        e.normalize();
        return e;
    }

    Rat number() {
        size_t start = pos_;
        while (std::isdigit((unsigned char)peek())) pos_++;
        std::string num = t_.substr(start, pos_ - start);
        if (peek() == '/') {
            pos_++;
            size_t ds = pos_;
            while (std::isdigit((unsigned char)peek())) pos_++;
            require(pos_ > ds, err("expected denominator digits"));
            return parse_rat(num + "/" + t_.substr(ds, pos_ - ds));
        }
        return parse_rat(num);
    }

    Rat signed_rat_arg() {
        skip();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            pos_++;
            skip();
        }
        require(std::isdigit((unsigned char)peek()), err("expected a rational argument"));
        Rat v = number();
        return neg ? -v : v;
    }

    std::pair<ConstAtom, int> atom_factor() {
        size_t start = pos_;
        while (std::isalnum((unsigned char)peek())) pos_++;
        std::string name = t_.substr(start, pos_ - start);
        ConstAtom atom;
        if (name == "pi") {
            atom = ConstAtom::pi();
        } else if (name == "zeta3") {
            atom = ConstAtom::zeta3();
        } else if (name == "G") {
            atom = ConstAtom::catalan_g();
        } else if (name == "K") {
            atom = ConstAtom::dirichlet_k();
        } else if (name == "sqrt" || name == "log" || name == "root" || name == "surd") {
            skip();
            require(peek() == '(', err("expected '(' after " + name));
            pos_++;
            std::vector<Rat> args;
            args.push_back(signed_rat_arg());
            skip();
            while (peek() == ',') {
                pos_++;
                args.push_back(signed_rat_arg());
                skip();
            }
            require(peek() == ')', err("expected ')'"));
            pos_++;
            if (name == "sqrt") {
                require(args.size() == 1, err("sqrt takes one argument"));
                atom = ConstAtom::sqrt_rat(args[0]);
            } else if (name == "log") {
                require(args.size() == 1, err("log takes one argument"));
                atom = ConstAtom::log_rat(args[0]);
            } else if (name == "root") {
                require(args.size() == 2, err("root takes two arguments"));
                require(args[1] > 0 && args[1].get_den() == 1, err("root index must be a positive integer"));
                atom = ConstAtom::root_rat(args[0], args[1].get_num().get_ui());
            } else {
                require(args.size() == 3, err("surd takes three arguments"));
                atom = ConstAtom::nested_surd(args[0], args[1], args[2]);
            }
        } else {
            fail(err("unknown constant '" + name + "'"));
        }
        int exp = 1;
        skip();
        if (peek() == '^') {
            pos_++;
            skip();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                pos_++;
            }
            require(std::isdigit((unsigned char)peek()), err("expected integer exponent"));
            long v = 0;
            while (std::isdigit((unsigned char)peek())) {
                v = v * 10 + (t_[pos_] - '0');
                pos_++;
            }
            exp = (int)(neg ? -v : v);
        }
        return {atom, exp};
    }

    const std::string& t_;
    size_t pos_ = 0;
};

} // namespace

ConstExpr parse_const_expr(const std::string& text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// Bernoulli numbers

namespace {
std::mutex g_bern_mutex;
std::vector<Rat> g_bern; // B_0, B_1, ...
} // namespace

Rat bernoulli(unsigned long n) {
    std::lock_guard<std::mutex> lock(g_bern_mutex);
    if (g_bern.empty()) g_bern.push_back(Rat(1));
    while (g_bern.size() <= n) {
        unsigned long m = g_bern.size();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rat s(0);
        for (unsigned long j = 0; j < m; j++)
            s += Rat(binomial(m + 1, j)) * g_bern[j];
        g_bern.push_back(-s / Rat(m + 1));
    }
    return g_bern[n];
}

// ---------------------------------------------------------------------------
// Euler–Maclaurin Hurwitz zeta (s integer >= 2, 0 < a <= 1)

namespace {

Int rising(long s, long j) {
    Int r(1);
    for (long t = 0; t < j; t++) r *= s + t;
    return r;
}

Rat rat_abs(const Rat& q) { return q < 0 ? -q : q; }

// zeta(s, a) = sum_{k>=0} (k+a)^(-s), exact rational plus error bound
Ball hurwitz_em(long s, const Rat& a, mpfr_prec_t prec) {
    require(s >= 2, "hurwitz_em: s must be >= 2");
    require(a > 0 && a <= 1, "hurwitz_em: need 0 < a <= 1");
    mpfr_prec_t wp = prec + 32;
    Rat target = rat_pow(Rat(1, 2), (long)prec + 16);

    long J = (long)(prec / 8) + 16;
    for (int attempt = 0; attempt < 8; attempt++, J *= 2) {
        Rat Ja = Rat(J) + a;
        // Euler–Maclaurin correction terms at J; they must reach the target
        // while still decreasing (remainder bounded by first omitted term
        // since all derivatives of (x+a)^(-s) alternate in sign).
        std::vector<Rat> emterms;
        Rat bound;
        bool ok = false;
        Rat prev_mag;
        Rat ja_pow = rat_pow(Ja, -(s + 1)); // (J+a)^(-s-2i+1) at i=1
        for (long i = 1;; i++) {
            Rat t = bernoulli(2 * (unsigned long)i) / Rat(factorial(2 * i)) *
                    Rat(rising(s, 2 * i - 1)) * ja_pow;
            Rat mag = rat_abs(t);
            if (mag < target) {
                bound = mag;
                ok = true;
                break;
            }
            if (i > 1 && mag >= prev_mag) break; // diverging: J too small
            emterms.push_back(t);
            prev_mag = mag;
            ja_pow /= Ja * Ja;
        }
        if (!ok) continue;

        Rat total(0);
        for (long k = 0; k < J; k++) total += rat_pow(Rat(k) + a, -s);
        total += rat_pow(Ja, 1 - s) / Rat(s - 1); // integral term
        total += rat_pow(Ja, -s) / 2;
        for (const Rat& t : emterms) total += t;

        Ball out = Ball::from_rat(total, wp);
        out.add_error(bound);
        return out;
    }
    fail("hurwitz_em: Euler–Maclaurin terms failed to reach target");
}

// ---------------------------------------------------------------------------
// Pi

Ball pi_chudnovsky(mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    long digits = (long)(wp * 0.30103) + 8;
    long N = digits / 14 + 3;

    const long A = 13591409, B = 545140134;
    const Int C3("262537412640768000"); // 640320^3
    BinsplitResult bs = binsplit(
        0, N, [&](long k) -> Int { return Int(A) + Int(B) * k; },
        [&](long k) -> Int { return Int(-8) * (6 * k + 1) * (6 * k + 3) * (6 * k + 5); },
        [&](long k) -> Int { return int_pow(Int(k + 1), 3) * C3; });

    Rat S(bs.T, bs.Q);
    // |sum_{k>=N} t_k| <= 2 |t_N|; successive ratios are below 1e-13
    Rat tN = rat_abs(Rat(Int(A) + Int(B) * N) * Rat(bs.U, bs.Q));
    Ball Sball = Ball::from_rat(S, wp);
    Sball.add_error(2 * tN);

    Ball p = Ball::from_int(426880, wp) * Ball::from_rat(Rat(10005), wp).sqrt() / Sball;
    return p;
}

// atan(1/x) for integer x >= 2, via the alternating Taylor series
Ball atan_inv(long x, mpfr_prec_t wp) {
    long N = (long)((wp + 16) / (2 * std::log2((double)x))) + 3;
    BinsplitResult bs = binsplit(
        0, N, [&](long) -> Int { return Int(1); }, [&](long j) -> Int { return Int(-(2 * j + 1)); },
        [&](long j) -> Int { return Int(2 * j + 3) * x * x; });
    Rat c0(1, x);
    Rat S = c0 * Rat(bs.T, bs.Q);
    Rat tail = rat_abs(c0 * Rat(bs.U, bs.Q)); // first omitted term bounds the rest
    Ball out = Ball::from_rat(S, wp);
    out.add_error(tail);
    return out;
}

Ball pi_machin(mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    Ball a5 = atan_inv(5, wp), a239 = atan_inv(239, wp);
    return a5.mul_2exp(4) - a239.mul_2exp(2);
}

// ---------------------------------------------------------------------------
// zeta(3)

Ball zeta3_central_binomial(mpfr_prec_t prec) {
    // (5/2) sum_{k>=1} (-1)^(k-1) / (k^3 C(2k,k)); ratio magnitude < 1/4
    mpfr_prec_t wp = prec + 32;
    long N = (long)((wp + 16) / 2.0) + 4;
    BinsplitResult bs = binsplit(
        1, N, [&](long) -> Int { return Int(1); }, [&](long k) -> Int { return Int(-1) * k * k * k; },
        [&](long k) -> Int { return Int(2) * (k + 1) * (k + 1) * (2 * k + 1); });
    Rat c1(1, 2); // term at k=1
    Rat S = c1 * Rat(bs.T, bs.Q);
    Rat tail = rat_abs(c1 * Rat(bs.U, bs.Q)); // alternating, decreasing
    Ball out = Ball::from_rat(S, wp);
    out.add_error(tail);
    return out * Ball::from_rat(Rat(5, 2), wp);
}

// ---------------------------------------------------------------------------
// logs

Ball ball_log(const Ball& x, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    Rat lo = x.lower(), hi = x.upper();
    require(lo > 0, "log of an interval reaching zero or below");
    Real a(wp), b(wp);
    mpfr_set_q(a.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_log(a.get(), a.get(), MPFR_RNDD);
    mpfr_set_q(b.get(), hi.get_mpq_t(), MPFR_RNDU);
    mpfr_log(b.get(), b.get(), MPFR_RNDU);
    return Ball::from_interval(a.to_rat(), b.to_rat(), wp);
}

// ln r = 2 atanh((r-1)/(r+1)), exact rational partial sums
Ball log_atanh_series(const Rat& r, mpfr_prec_t prec) {
    require(r > 0, "log of nonpositive rational");
    mpfr_prec_t wp = prec + 32;
    if (r == 1) return Ball::zero(wp);
    Rat u = (r - 1) / (r + 1);
    Rat u2 = u * u;
    Rat target = rat_pow(Rat(1, 2), (long)prec + 16);
    Rat geom = 1 / (1 - u2);
    Rat total(0), upow = u;
    for (long j = 0;; j++) {
        Rat bound = rat_abs(upow) / Rat(2 * j + 1) * geom;
        if (bound < target) {
            Ball out = Ball::from_rat(2 * total, wp);
            out.add_error(2 * bound);
            return out;
        }
        total += upow / Rat(2 * j + 1);
        upow *= u2;
    }
}

// ---------------------------------------------------------------------------
// Catalan G

Ball catalan_ramanujan(mpfr_prec_t prec) {
    // G = (pi/8) ln(2+sqrt(3)) + (3/8) sum_{n>=0} 1/((2n+1)^2 C(2n,n))
    mpfr_prec_t wp = prec + 64;
    long N = (long)((wp + 16) / 2.0) + 4; // ratio <= 1/4
    BinsplitResult bs = binsplit(
        0, N, [&](long) -> Int { return Int(1); }, [&](long n) -> Int { return Int(2 * n + 1) * (n + 1); },
        [&](long n) -> Int { return Int(2) * (2 * n + 3) * (2 * n + 3); });
    Rat S(bs.T, bs.Q);
    Rat tail = Rat(bs.U, bs.Q) * Rat(4, 3);
    Ball series = Ball::from_rat(S, wp);
    series.add_error(tail);

    Ball pi = atom_eval(ConstAtom::pi(), wp);
    Ball arg = Ball::from_int(2, wp) + Ball::from_rat(Rat(3), wp).sqrt();
    Ball lg = ball_log(arg, wp);
    return pi * lg * Ball::from_rat(Rat(1, 8), wp) +
           series * Ball::from_rat(Rat(3, 8), wp);
}

Ball catalan_hurwitz(mpfr_prec_t prec) {
    // G = (zeta(2,1/4) - zeta(2,3/4)) / 16
    Ball d = hurwitz_em(2, Rat(1, 4), prec + 8) - hurwitz_em(2, Rat(3, 4), prec + 8);
    return d * Ball::from_rat(Rat(1, 16), prec + 8);
}

// ---------------------------------------------------------------------------
// Dirichlet K = L(2, chi_-3)

Ball k_hurwitz(mpfr_prec_t prec) {
    // K = (zeta(2,1/3) - zeta(2,2/3)) / 9
    Ball d = hurwitz_em(2, Rat(1, 3), prec + 8) - hurwitz_em(2, Rat(2, 3), prec + 8);
    return d * Ball::from_rat(Rat(1, 9), prec + 8);
}

Ball k_direct_blocks(mpfr_prec_t prec) {
    // sum over blocks 1/(3j+1)^2 - 1/(3j+2)^2, positive and decreasing;
    // tail over j >= J is below 1/(18(J-1)^2). Only practical at low
    // precision; the caller caps requested digits accordingly.
    mpfr_prec_t wp = prec + 32;
    double Jd = std::sqrt(std::pow(2.0, (double)prec + 6) / 18.0) + 2;
    require(Jd < 5e7, "k_direct_blocks: precision too high for the direct route");
    long J = (long)Jd;
    Ball acc = Ball::zero(wp);
    for (long j = 0; j < J; j++) {
        Rat block = Rat(1, Int(3 * j + 1) * Int(3 * j + 1)) -
                    Rat(1, Int(3 * j + 2) * Int(3 * j + 2));
        acc = acc + Ball::from_rat(block, wp);
    }
    acc.add_error(Rat(1, 18 * Int(J - 1) * Int(J - 1)));
    return acc;
}

// ---------------------------------------------------------------------------
// atom evaluation with memoization

std::mutex g_atom_mutex;
std::map<std::string, Ball> g_atom_cache;

Ball atom_eval_route(const ConstAtom& atom, mpfr_prec_t prec, bool alt) {
    mpfr_prec_t wp = prec + 32;
    switch (atom.tag) {
    case AtomTag::Pi: return alt ? pi_machin(prec) : pi_chudnovsky(prec);
    case AtomTag::SqrtRat: return Ball::from_rat(atom.r, wp).sqrt();
    case AtomTag::RootRat: return Ball::from_rat(atom.r, wp).root(atom.n);
    case AtomTag::NestedSurd: {
        Ball inner = Ball::from_rat(atom.a, wp) +
                     Ball::from_rat(atom.b, wp) * Ball::from_rat(atom.c, wp).sqrt();
        return inner.sqrt();
    }
    case AtomTag::Zeta3: return alt ? hurwitz_em(3, Rat(1), prec) : zeta3_central_binomial(prec);
    case AtomTag::CatalanG: return alt ? catalan_hurwitz(prec) : catalan_ramanujan(prec);
    case AtomTag::DirichletK: return alt ? k_direct_blocks(prec) : k_hurwitz(prec);
    case AtomTag::LogRat:
        return alt ? log_atanh_series(atom.r, prec)
                   : ball_log(Ball::from_rat(atom.r, prec + 32), prec);
    }
    fail("atom_eval: unhandled atom");
}

} // namespace

Ball atom_eval(const ConstAtom& atom, mpfr_prec_t prec) {
    std::string key = atom.str() + "#" + std::to_string(prec);
    {
        std::lock_guard<std::mutex> lock(g_atom_mutex);
        auto it = g_atom_cache.find(key);
        if (it != g_atom_cache.end()) return it->second;
    }
    Ball b = atom_eval_route(atom, prec, false);
    std::lock_guard<std::mutex> lock(g_atom_mutex);
    auto it = g_atom_cache.find(key);
    if (it == g_atom_cache.end()) it = g_atom_cache.emplace(key, b).first;
    return it->second;
}

Ball atom_eval_alt(const ConstAtom& atom, mpfr_prec_t prec) {
    return atom_eval_route(atom, prec, true);
}

Ball const_eval(const ConstExpr& expr, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    Ball acc = Ball::zero(wp);
    for (const auto& [coef, mono] : expr.terms) {
        Ball t = Ball::from_rat(coef, wp);
        for (const auto& [atom, e] : mono.powers) t = t * atom_eval(atom, wp).pow_int(e);
        acc = acc + t;
    }
    return acc;
}

Ball dirichlet_k_value(mpfr_prec_t prec) { return atom_eval(ConstAtom::dirichlet_k(), prec); }

mpfr_prec_t digits_to_prec(long digits) {
    return (mpfr_prec_t)std::ceil((double)digits * 3.321928094887362) + 32;
}

} // namespace piforge
