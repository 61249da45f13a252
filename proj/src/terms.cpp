#include "terms.hpp"

#include <sstream>

#include "util.hpp"

namespace piforge {

std::string SeqFactor::str() const {
    std::ostringstream s;
    s << kind.str();
    if (mu != 1 || sigma != 0) {
        s << "@";
        if (mu != 1) s << mu;
        s << "k";
        if (sigma != 0) s << sigma;
    }
    if (exp != 1) s << "^" << exp;
    return s.str();
}

bool SeqFactor::operator==(const SeqFactor& o) const {
    return kind == o.kind && exp == o.exp && mu == o.mu && sigma == o.sigma;
}

std::string TermSpec::str() const {
    std::ostringstream s;
    s << "sum_{k>=" << start << "} (" << numer.str("k") << ")";
    if (!(denom == Poly(Rat(1)))) s << "/(" << denom.str("k") << ")";
    for (const auto& f : factors) s << " * " << f.str();
    if (base != 1) {
        s << (base_divides ? " / " : " * ");
        s << "(" << rat_string(base) << ")^k";
    }
    return s.str();
}

bool TermSpec::operator==(const TermSpec& o) const {
    return numer == o.numer && denom == o.denom && base == o.base &&
           base_divides == o.base_divides && factors == o.factors && start == o.start;
}

namespace {

bool is_affine_like(const SeqKind& k) {
    return k.tag == SeqTag::AffineBinomial || k.tag == SeqTag::Catalan;
}

// 0 <= b*n+b0 <= a*n+a0 for all n >= n0 (so the binomial is positive there)
bool affine_positive_from(const SeqKind& k, long n0) {
    long lo = k.b * n0 + k.b0;
    long hi = k.a * n0 + k.a0;
    return k.b >= 0 && k.a >= k.b && lo >= 0 && hi - lo >= 0;
}

} // namespace

void validate_spec(const TermSpec& spec, long scan_limit) {
    require(spec.base != 0, "term spec: zero base");
    require(!spec.denom.is_zero(), "term spec: zero denominator polynomial");
    require(spec.start == 0 || spec.start == 1, "term spec: start index must be 0 or 1");
    for (const auto& f : spec.factors) {
        require(f.exp != 0, "term spec: factor with zero exponent");
        require(f.mu >= 1, "term spec: index map needs mu >= 1");
        require(f.sigma == 0 || f.sigma == -1, "term spec: index offset must be 0 or -1");
        require(f.mu * spec.start + f.sigma >= 0,
                "term spec: factor " + f.str() + " indexes below 0 at k=" +
                    std::to_string(spec.start));
        if (f.exp < 0) {
            if (f.kind.tag == SeqTag::AffineBinomial) {
                require(affine_positive_from(f.kind, f.mu * spec.start + f.sigma),
                        "term spec: inverted factor " + f.str() +
                            " is not positive over the summation range");
            }
            // other kinds are guarded per-term in term_exact
        }
    }
    for (long k = spec.start; k <= spec.start + scan_limit; k++) {
        require(spec.denom(Rat(k)) != 0,
                "term spec: denominator polynomial vanishes at k=" + std::to_string(k));
    }
}

Rat term_exact(const TermSpec& spec, long k) {
    require(k >= spec.start, "term_exact: k below start index");
    Rat den = spec.denom(Rat(k));
    require(den != 0, "term_exact: denominator polynomial vanishes at k=" + std::to_string(k));
    Rat t = spec.numer(Rat(k)) / den;
    for (const auto& f : spec.factors) {
        long idx = f.mu * k + f.sigma;
        require(idx >= 0, "term_exact: negative sequence index");
        auto table = seq_prefix(f.kind, idx);
        Rat v = (*table)[(size_t)idx];
        if (f.exp < 0)
            require(v != 0, "term_exact: inverted factor " + f.str() + " vanishes at k=" +
                                std::to_string(k));
        if (v == 0 && f.exp > 0) return Rat(0);
        t *= rat_pow(v, f.exp);
    }
    if (spec.base != 1) {
        Rat bp = rat_pow(spec.base, k);
        if (spec.base_divides)
            t /= bp;
        else
            t *= bp;
    }
    return t;
}

namespace {

Poly linear(const Rat& c, const Rat& d) { return Poly::from_coeffs({d, c}); }

// prod_{i=1..cnt} (c*x + d + i)
Poly rising_block(const Rat& c, const Rat& d, long cnt) {
    Poly p(Rat(1));
    for (long i = 1; i <= cnt; i++) p = p * linear(c, d + Rat(i));
    return p;
}

// seq(n+1)/seq(n) with n = nc*k + nd substituted, as num/den polynomials in k
void step_ratio(const SeqKind& kind, const Rat& nc, const Rat& nd, Poly& num, Poly& den) {
    if (kind.tag == SeqTag::Catalan) {
        // C(n+1) = C(n) * 2(2n+1)/(n+2)
        num = linear(nc * 4, nd * 4 + 2);
        den = linear(nc, nd + 2);
        return;
    }
    long a = kind.a, a0 = kind.a0, b = kind.b, b0 = kind.b0;
    require(a >= 0 && b >= 0 && a >= b,
            "hypergeometric ratio needs binomial parameters a >= b >= 0, got " + kind.str());
    num = rising_block(nc * a, Rat(a) * nd + a0, a);
    den = rising_block(nc * b, Rat(b) * nd + b0, b) *
          rising_block(nc * (a - b), Rat(a - b) * nd + (a0 - b0), a - b);
}

RationalFunction rf_pow(const RationalFunction& r, int e) {
    RationalFunction out(Poly(Rat(1)), Poly(Rat(1)));
    RationalFunction base = e >= 0 ? r : RationalFunction(r.den(), r.num());
    for (int i = 0; i < (e >= 0 ? e : -e); i++) out = out * base;
    return out;
}

} // namespace

bool is_hypergeometric(const TermSpec& spec) {
    for (const auto& f : spec.factors)
        if (!is_affine_like(f.kind)) return false;
    return true;
}

std::optional<RationalFunction> core_ratio(const TermSpec& spec) {
    if (!is_hypergeometric(spec)) return std::nullopt;
    Rat b = spec.base_divides ? Rat(1) / spec.base : spec.base;
    RationalFunction r(Poly(b.get_num()), Poly(b.get_den()));
    for (const auto& f : spec.factors) {
        // seq(mu(k+1)+sigma)/seq(mu k+sigma) as mu single steps at n = mu k + sigma + j
        RationalFunction fr(Poly(Rat(1)), Poly(Rat(1)));
        for (long j = 0; j < f.mu; j++) {
            Poly num, den;
            step_ratio(f.kind, Rat(f.mu), Rat(f.sigma + j), num, den);
            fr = fr * RationalFunction(num, den);
        }
        r = r * rf_pow(fr, f.exp);
    }
    // denom(k)/denom(k+1)
    r = r * RationalFunction(spec.denom, spec.denom.shifted(Rat(1)));
    return r;
}

std::optional<RationalFunction> term_ratio(const TermSpec& spec) {
    auto core = core_ratio(spec);
    if (!core) return std::nullopt;
    return *core * RationalFunction(spec.numer.shifted(Rat(1)), spec.numer);
}

SeqFactor parse_seq_factor(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace((unsigned char)c)) text += c;
    require(!text.empty(), "empty sequence factor");

    auto parse_long = [&](const std::string& s, const char* what) {
        require(!s.empty(), std::string("sequence factor '") + raw + "': empty " + what);
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        require(i < s.size(), std::string("sequence factor '") + raw + "': bad " + what);
        for (size_t j = i; j < s.size(); j++)
            require(std::isdigit((unsigned char)s[j]),
                    std::string("sequence factor '") + raw + "': bad " + what);
        return std::stol(s);
    };

    SeqFactor f;
    // trailing ^exp (kind and index strings never contain '^')
    size_t caret = text.rfind('^');
    if (caret != std::string::npos) {
        f.exp = (int)parse_long(text.substr(caret + 1), "exponent");
        require(f.exp != 0, "sequence factor '" + raw + "': zero exponent");
        text = text.substr(0, caret);
    }
    // optional @index part: [mu]k[sigma]
    size_t at = text.find('@');
    if (at != std::string::npos) {
        std::string idx = text.substr(at + 1);
        text = text.substr(0, at);
        size_t kpos = idx.find('k');
        require(kpos != std::string::npos, "sequence factor '" + raw + "': index needs 'k'");
        std::string mu = idx.substr(0, kpos), sig = idx.substr(kpos + 1);
        if (mu == "-") mu = "-1";
        f.mu = mu.empty() ? 1 : parse_long(mu, "index dilation");
        f.sigma = sig.empty() ? 0 : parse_long(sig, "index offset");
    }
    f.kind = parse_seq_kind(text);
    return f;
}

} // namespace piforge
