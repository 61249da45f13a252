#include "series.hpp"

#include <chrono>

#include "binsplit.hpp"
#include "constants.hpp"
#include "util.hpp"

namespace piforge {

std::string tail_class_name(TailClass c) {
    return c == TailClass::rigorous ? "rigorous" : "ratio-assumed";
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Streams exact terms t(start), t(start+1), ... with O(1) big-number work
// per step beyond the sequence tables.
class TermStream {
public:
    TermStream(const TermSpec& spec, long k_max) : spec_(spec), k_(spec.start) {
        for (const auto& f : spec.factors)
            tables_.push_back(seq_prefix(f.kind, f.mu * k_max + f.sigma));
        basepow_ = rat_pow(spec.base, spec.start);
    }

    Rat next() {
        long k = k_;
        Rat den = spec_.denom(Rat(k));
        require(den != 0, "term stream: denominator polynomial vanishes at k=" +
                              std::to_string(k));
        Rat t = spec_.numer(Rat(k)) / den;
        for (size_t i = 0; i < spec_.factors.size(); i++) {
            const auto& f = spec_.factors[i];
            const Rat& v = (*tables_[i])[(size_t)(f.mu * k + f.sigma)];
            if (f.exp < 0)
                require(v != 0, "term stream: inverted factor vanishes at k=" +
                                    std::to_string(k));
            t *= rat_pow(v, f.exp);
        }
        if (spec_.base != 1) {
            if (spec_.base_divides)
                t /= basepow_;
            else
                t *= basepow_;
        }
        basepow_ *= spec_.base;
        k_++;
        return t;
    }

private:
    const TermSpec& spec_;
    long k_;
    Rat basepow_;
    std::vector<std::shared_ptr<const std::vector<Rat>>> tables_;
};

// Non-polynomial part of the term at k: prod factors / denom(k) * base^(+-k).
Rat core_at(const TermSpec& spec, long k) {
    Rat den = spec.denom(Rat(k));
    require(den != 0, "core_at: denominator polynomial vanishes");
    Rat t = Rat(1) / den;
    for (const auto& f : spec.factors) {
        auto table = seq_prefix(f.kind, f.mu * k + f.sigma);
        const Rat& v = (*table)[(size_t)(f.mu * k + f.sigma)];
        if (f.exp < 0) require(v != 0, "core_at: inverted factor vanishes");
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

Int int_eval(const Poly& p, long k) {
    Rat r = p(Rat(k));
    require(r.get_den() == 1, "integerized polynomial evaluated to a non-integer");
    return r.get_num();
}

// All coefficients of p nonnegative (sufficient for p >= 0 on x >= 0).
bool coeffs_nonneg(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (c < 0) return false;
    return true;
}

TailInfo tail_with_cert(const TermSpec& spec, long K0,
                        const std::optional<RatioCertificate>& cert) {
    require(K0 >= spec.start, "tail bound: K0 below start index");
    TailInfo out;
    if (cert) {
        // exact |t| over any gap up to K1, then the geometric bound
        long from = std::max(K0 + 1, cert->K1);
        Rat mid(0);
        for (long k = K0 + 1; k < from; k++) mid += abs(term_exact(spec, k));
        out.bound = mid + abs(term_exact(spec, from)) / (Rat(1) - cert->rho);
        out.cls = TailClass::rigorous;
        return out;
    }
    // Consecutive-term ratios are useless for factors with sign oscillation
    // (trinomial weights with negative c dip near their cosine zeros), so the
    // decay estimate compares block maxima instead: the envelope of |t| is
    // geometric even when individual terms are not.
    const long L = 32;
    auto block_max = [&](long lo) {
        Rat m(0);
        for (long k = lo; k < lo + L; k++) {
            Rat a = abs(term_exact(spec, k));
            if (a > m) m = a;
        }
        return m;
    };
    Rat B0 = block_max(K0 + 1);
    Rat B1 = block_max(K0 + 1 + L);
    Rat B2 = block_max(K0 + 1 + 2 * L);
    if (B0 == 0 && B1 == 0 && B2 == 0) {
        out.bound = Rat(0); // terms vanished for three full blocks
        out.cls = TailClass::ratio_assumed;
        return out;
    }
    require(B0 != 0 && B1 != 0 && B2 != 0,
            "tail bound: vanishing block at K0=" + std::to_string(K0));
    Rat rho = B1 / B0;
    if (B2 / B1 > rho) rho = B2 / B1;
    require(rho < rat(49, 50),
            "tail bound: no decay established at K0=" + std::to_string(K0) +
                " (block-max ratio >= 0.98)");
    out.bound = Rat(L) * (B0 + B1 / (Rat(1) - rho));
    out.cls = TailClass::ratio_assumed;
    return out;
}

std::optional<RatioCertificate> spec_certificate(const TermSpec& spec) {
    auto tr = term_ratio(spec);
    if (!tr) return std::nullopt;
    auto cert = certify_ratio(*tr);
    // a far-out K1 would make the exact gap walk expensive; fall back
    if (cert && cert->K1 > (1L << 14)) return std::nullopt;
    return cert;
}

// Leading terms that are exactly zero contribute nothing but can make the
// hypergeometric step ratio singular (binom(2k,k+1) vanishes at k=0); start
// past them.
TermSpec skip_leading_zeros(TermSpec spec) {
    for (int g = 0; g < 64 && term_exact(spec, spec.start) == 0; g++) spec.start++;
    return spec;
}

} // namespace

Rat partial_sum_naive(const TermSpec& spec, long N) {
    require(N >= spec.start, "partial sum: N below start index");
    long count = N - spec.start + 1;
    TermStream st(spec, N + 1);
    Rat s(0);
    for (long i = 0; i < count; i++) s += st.next();
    return s;
}

Rat partial_sum_binsplit(const TermSpec& spec_in, long N) {
    require(N >= spec_in.start, "binsplit partial sum: N below start index");
    TermSpec spec = skip_leading_zeros(spec_in);
    if (N < spec.start) return Rat(0);
    auto cr = core_ratio(spec);
    require(cr.has_value(), "binsplit partial sum: series is not hypergeometric");

    Int L(1), LW(1);
    auto fold_dens = [](Int& acc, const Poly& p) {
        for (const auto& c : p.coeffs())
            mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den().get_mpz_t());
    };
    fold_dens(L, cr->num());
    fold_dens(L, cr->den());
    fold_dens(LW, spec.numer);
    Poly un = cr->num() * Rat(L);
    Poly vn = cr->den() * Rat(L);
    Poly wn = spec.numer * Rat(LW);

    BinsplitResult bs = binsplit(
        spec.start, N + 1, [&](long k) { return int_eval(wn, k); },
        [&](long k) { return int_eval(un, k); }, [&](long k) { return int_eval(vn, k); });
    return core_at(spec, spec.start) * rat(bs.T, bs.Q) / Rat(LW);
}

Rat partial_sum_exact(const TermSpec& spec, long N) {
    return is_hypergeometric(spec) ? partial_sum_binsplit(spec, N)
                                   : partial_sum_naive(spec, N);
}

std::optional<RatioCertificate> certify_ratio(const RationalFunction& r) {
    if (r.num().is_zero()) return std::nullopt;
    int dn = r.num().degree(), dd = r.den().degree();
    if (dn > dd) return std::nullopt; // |ratio| unbounded
    Rat lam = dn == dd ? abs(r.num().leading() / r.den().leading()) : Rat(0);
    if (lam >= 1) return std::nullopt;

    for (int quarter : {1, 2, 3}) {
        Rat rho = lam + (Rat(1) - lam) * rat(quarter, 4);
        Poly gap = r.den() * r.den() * (rho * rho) - r.num() * r.num();
        for (long K1 = 1; K1 <= (1L << 20); K1 *= 2) {
            Poly g = gap.shifted(Rat(K1));
            if (!coeffs_nonneg(g)) continue;
            Poly d = r.den().shifted(Rat(K1));
            if (!coeffs_nonneg(d) || !(d.coeff(0) > 0)) continue;
            return RatioCertificate{rho, K1};
        }
    }
    return std::nullopt;
}

TailInfo tail_bound(const TermSpec& spec, long K0) {
    return tail_with_cert(spec, K0, spec_certificate(spec));
}

namespace {

// Shape test for the slowly convergent alternating series the transform
// handles: sum (-1)^k P(k) C(2k,k)^E / 4^(Ek) with E >= 1 and deg P < E/2
// (the convergence condition). Returns E.
std::optional<int> slow_shape(const TermSpec& spec) {
    if (!spec.base_divides || spec.base >= 0) return std::nullopt;
    if (!(spec.denom == Poly(Rat(1)))) return std::nullopt;
    if (spec.start != 0) return std::nullopt;
    int E = 0;
    for (const auto& f : spec.factors) {
        if (!(f.kind == SeqKind::central_binom()) || f.mu != 1 || f.sigma != 0 || f.exp < 1)
            return std::nullopt;
        E += f.exp;
    }
    if (E == 0) return std::nullopt;
    if (spec.base != -rat_pow(Rat(4), E)) return std::nullopt;
    if (2 * spec.numer.degree() >= E) return std::nullopt;
    return E;
}

// P(x) = sum_i p[i] * C(x+i, i), solved by descending-degree elimination.
std::vector<Rat> binomial_basis_coeffs(Poly p) {
    int d = p.degree();
    require(d >= 0, "binomial basis: zero polynomial");
    std::vector<Rat> out((size_t)d + 1);
    for (int i = d; i >= 0; i--) {
        Rat pi = p.coeff(i) * Rat(factorial((unsigned long)i));
        out[(size_t)i] = pi;
        Poly bi(Rat(1)); // C(x+i, i) = prod_{t=1..i} (x+t) / i!
        for (int t = 1; t <= i; t++) bi = bi * Poly::from_coeffs({Rat(t), Rat(1)});
        bi = bi * (Rat(1) / Rat(factorial((unsigned long)i)));
        p = p - bi * pi;
    }
    require(p.is_zero(), "binomial basis: elimination left a remainder");
    return out;
}

// Certified evaluation of sum_{k>=0} (-1)^k P(k) h_k with h_k = C(2k,k)^E/4^(Ek).
//
// h is a Hausdorff moment sequence: C(2k,k)/4^k integrates t^k against the
// arcsine measure on [0,1] (a Beta(1/2,1/2) law), and products of moment
// sequences are moment sequences of the pushforward product measure. After
// summing a head of K terms exactly, the remainder is rewritten against the
// variable s = (1-t)/2, which lives in [0, 1/2]:
//   sum_j (-1)^j P(K+j) h_{K+j} = sum_u q_u * delta_u,
// where delta_u = integral of s^u (exactly the forward difference
// (-Delta)^u h_K / 2^u, all nonnegative and halving: delta_{u+1} <=
// delta_u / 2) and q_u = sum_i p_i 2^{-(i+1)} C(u+i, i) from the expansion of
// P(K+x) in the binomial basis. The tail over u >= J is bounded through the
// halving property and the per-basis geometric bound
//   sum_{u>=0} C(J+u+i, i) 2^-u <= C(J+i, i) * 2(J+1)/(J+1-i).
// Everything is exact rational arithmetic; the final enclosure adds the tail
// bound as a ball radius.
EvalReport evaluate_alternating(const TermSpec& spec, long digits, int E) {
    auto t0 = std::chrono::steady_clock::now();
    const long K = 32;
    mpfr_prec_t prec = digits_to_prec(digits) + 32;
    Rat target = rat_pow(Rat(1, 10), digits + 5);

    Rat head(0);
    {
        TermStream st(spec, K);
        for (long k = 0; k < K; k++) head += st.next();
    }

    Poly pt = spec.numer.shifted(Rat(K));
    std::vector<Rat> p = binomial_basis_coeffs(pt);
    int d = pt.degree();

    long J = (long)(3.5 * (double)(digits + 6)) + 8 * (d + 1) + 32;
    for (;;) {
        require(J <= (1L << 22), "alternating transform: tail will not certify");
        // row[j] = h_{K+j}, exactly
        std::vector<Rat> row((size_t)J + 1);
        Rat c = rat(binomial(2 * K, K), int_pow(Int(4), (unsigned long)K));
        for (long j = 0; j <= J; j++) {
            row[(size_t)j] = rat_pow(c, E);
            long m = K + j;
            c *= Rat(2 * m + 1, 2 * m + 2);
        }
        // forward-difference triangle: after round j, row[0] = (-Delta)^j h_K
        std::vector<Rat> delta((size_t)J + 1);
        delta[0] = row[0];
        Rat pw(1);
        bool ok = true;
        for (long j = 1; j <= J && ok; j++) {
            for (long i = 0; i + j <= J; i++) row[(size_t)i] -= row[(size_t)i + 1];
            pw *= 2;
            delta[(size_t)j] = row[0] / pw;
            // moment-sequence invariants; a violation would falsify the setup
            ok = delta[(size_t)j] >= 0 && 2 * delta[(size_t)j] <= delta[(size_t)j - 1];
        }
        require(ok, "alternating transform: moment invariants violated");

        Rat transformed(0);
        std::vector<Rat> half_pows((size_t)d + 1);
        for (int i = 0; i <= d; i++) half_pows[(size_t)i] = rat_pow(Rat(1, 2), i + 1);
        for (long j = 0; j < J; j++) {
            Rat qj(0);
            for (int i = 0; i <= d; i++)
                qj += p[(size_t)i] * half_pows[(size_t)i] * Rat(binomial(j + i, i));
            transformed += qj * delta[(size_t)j];
        }
        Rat tail(0);
        for (int i = 0; i <= d; i++) {
            require(J + 1 - i > 0, "alternating transform: J too small for degree");
            tail += abs(p[(size_t)i]) * half_pows[(size_t)i] * Rat(binomial(J + i, i)) *
                    delta[(size_t)J] * rat(2 * (J + 1), J + 1 - i);
        }
        if (tail > target) {
            J *= 2;
            continue;
        }
        Rat total = head + (K % 2 == 0 ? transformed : -transformed);
        EvalReport rep;
        rep.value = Ball::from_rat(total, prec);
        rep.value.add_error(tail);
        rep.terms_used = K + J;
        rep.tail_bound = tail;
        rep.tail_class = TailClass::rigorous;
        rep.notes = "euler-transform";
        rep.wall_seconds = seconds_since(t0);
        return rep;
    }
}

} // namespace

EvalReport evaluate(const TermSpec& spec_in, long digits) {
    auto t0 = std::chrono::steady_clock::now();
    require(digits >= 1, "evaluate: digits must be >= 1");
    validate_spec(spec_in);
    TermSpec spec = skip_leading_zeros(spec_in);

    if (spec.numer.is_zero()) {
        EvalReport rep;
        rep.value = Ball::zero(digits_to_prec(digits));
        rep.tail_bound = Rat(0);
        rep.tail_class = TailClass::rigorous;
        rep.notes = "zero numerator";
        rep.wall_seconds = seconds_since(t0);
        return rep;
    }

    if (auto e = slow_shape(spec)) return evaluate_alternating(spec, digits, *e);

    Rat target = rat_pow(Rat(1, 10), digits + 5);
    mpfr_prec_t prec = digits_to_prec(digits) + 32;
    std::optional<RatioCertificate> cert = spec_certificate(spec);

    long N = 64;
    TailInfo tail;
    for (;;) {
        require(N <= (1L << 21), "evaluate: tail bound does not certify below target");
        long K0 = spec.start + N - 1;
        bool grown = false;
        try {
            tail = tail_with_cert(spec, K0, cert);
        } catch (const Error&) {
            N *= 2; // no decay visible yet at this K0
            grown = true;
        }
        if (grown) continue;
        if (tail.bound <= target) break;
        N *= 2;
    }

    long N_end = spec.start + N - 1;
    EvalReport rep;
    rep.terms_used = N;
    rep.tail_bound = tail.bound;
    rep.tail_class = tail.cls;
    if (is_hypergeometric(spec)) {
        rep.value = Ball::from_rat(partial_sum_binsplit(spec, N_end), prec);
        rep.notes = tail.cls == TailClass::rigorous ? "binsplit" : "binsplit, empirical tail";
    } else {
        TermStream st(spec, N_end + 1);
        Ball acc = Ball::zero(prec);
        for (long i = 0; i < N; i++) acc = acc + Ball::from_rat(st.next(), prec);
        rep.value = acc;
        rep.notes = "direct sum, sequence factors";
    }
    rep.value.add_error(tail.bound);
    rep.wall_seconds = seconds_since(t0);
    return rep;
}

} // namespace piforge
