#include "telescope.hpp"

#include <algorithm>
#include <cmath>

#include "linalg.hpp"
#include "series.hpp"
#include "util.hpp"

namespace piforge {

namespace {

Poly exact_poly_div(const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    require(r.is_zero(), "telescope: inexact polynomial division");
    return q;
}

// Clear denominators: A/B == ratio with integer coefficients.
void integerize(const RationalFunction& ratio, Poly& a, Poly& b) {
    Int l(1);
    for (const Rat& c : ratio.num().coeffs()) l = lcm(l, c.get_den());
    for (const Rat& c : ratio.den().coeffs()) l = lcm(l, c.get_den());
    a = ratio.num() * Rat(l);
    b = ratio.den() * Rat(l);
}

// Gosper normal form: ratio == p(k+1) q(k) / (p(k) r(k+1)) with
// gcd(q(k), r(k+j)) constant for every integer j >= 1.
struct NormalForm {
    Poly p, q, r;
};

NormalForm normal_form(const RationalFunction& ratio) {
    require(!ratio.is_zero(), "telescope: zero term ratio");
    Poly a, b;
    integerize(ratio, a, b);
    NormalForm nf;
    nf.p = Poly(Rat(1));
    nf.q = a;
    nf.r = b.shifted(Rat(-1));
    for (long h : dispersion_shifts(nf.q, nf.r)) {
        if (h < 1) continue;
        for (;;) {
            Poly g = poly_gcd(nf.q, nf.r.shifted(Rat(h)));
            if (g.degree() < 1) break;
            nf.q = exact_poly_div(nf.q, g);
            nf.r = exact_poly_div(nf.r, g.shifted(Rat(-h)));
            for (long i = 1; i < h; i++) nf.p = nf.p * g.shifted(Rat(-i));
        }
    }
    // a p r(+1) == b p(+1) q reconstructs the input ratio.
    require(a * nf.p * nf.r.shifted(Rat(1)) == b * nf.p.shifted(Rat(1)) * nf.q,
            "telescope: normal form reconstruction failed");
    return nf;
}

// Largest possible degree of a polynomial f with q f(+1) - r f = rhs.
int degree_bound(const Poly& q, const Poly& r, const Poly& rhs) {
    int l = std::max(q.degree(), r.degree());
    if (q.degree() != r.degree() || q.leading() != r.leading())
        return rhs.degree() - l;
    int best = rhs.degree() - l + 1;
    if (l >= 1) {
        Rat z = -(q.coeff(l - 1) - r.coeff(l - 1)) / q.leading();
        if (z.get_den() == 1 && z >= 0 && z.get_num().fits_slong_p())
            best = std::max(best, (int)z.get_num().get_si());
    }
    return best;
}

// Solve q(k) f(k+1) - r(k) f(k) = rhs(k) for polynomial f of degree <= d.
std::optional<Poly> solve_degree(const Poly& q, const Poly& r, const Poly& rhs, int d) {
    std::vector<Poly> cols;
    int rows = rhs.degree() + 1;
    for (int j = 0; j <= d; j++) {
        Poly xj = pow(Poly::var(), (unsigned)j);
        Poly cj = q * xj.shifted(Rat(1)) - r * xj;
        rows = std::max(rows, cj.degree() + 1);
        cols.push_back(cj);
    }
    RatMat m(rows, RatVec(d + 1, Rat(0)));
    RatVec b(rows, Rat(0));
    for (int j = 0; j <= d; j++)
        for (int i = 0; i <= cols[j].degree(); i++) m[i][j] = cols[j].coeff(i);
    for (int i = 0; i <= rhs.degree(); i++) b[i] = rhs.coeff(i);
    auto sol = solve_linear(m, b);
    if (!sol) return std::nullopt;
    return Poly::from_coeffs(*sol);
}

// Smallest first nonzero index, scanning for integer roots of p at or past s.
void require_nonvanishing_from(const Poly& p, long s, const char* what) {
    require(!p.is_zero(), "telescope: zero polynomial in certificate");
    // Integer roots are bounded by the Cauchy bound 1 + max |c_i / c_d|.
    Rat bound(1);
    for (int i = 0; i < p.degree(); i++) {
        Rat t = abs(p.coeff(i) / p.leading());
        if (t > bound) bound = t;
    }
    long hi = (long)std::ceil(bound.get_d()) + 1;
    for (long k = s; k <= std::max(s, hi); k++)
        require(p(Rat(k)) != 0, std::string(what) + " vanishes at k=" + std::to_string(k));
}

} // namespace

GosperResult gosper(const RationalFunction& ratio, const Poly& multiplier) {
    GosperResult res;
    if (multiplier.is_zero()) {
        res.found = true;
        res.cert = Certificate{multiplier, RationalFunction()};
        return res;
    }
    NormalForm nf = normal_form(ratio);
    Poly rhs = nf.p * multiplier;
    int dmax = degree_bound(nf.q, nf.r, rhs);
    for (int d = 0; d <= dmax; d++) {
        auto f = solve_degree(nf.q, nf.r, rhs, d);
        if (!f || f->is_zero()) continue;
        RationalFunction y(nf.r * *f, nf.p);
        RationalFunction y1((nf.r * *f).shifted(Rat(1)), nf.p.shifted(Rat(1)));
        require(y1 * ratio - y == RationalFunction(multiplier, Poly(Rat(1))),
                "telescope: certificate identity failed symbolic check");
        res.found = true;
        res.cert = Certificate{multiplier, y};
        return res;
    }
    return res;
}

std::vector<ZeroSum> find_zero_sum(const TermSpec& core_in, int max_deg) {
    require(max_deg >= 0, "find_zero_sum: max_deg must be >= 0");
    TermSpec core = core_in;
    core.numer = Poly(Rat(1));
    validate_spec(core);
    auto ratio = core_ratio(core);
    require(ratio.has_value(), "find_zero_sum: core is not hypergeometric");
    // Geometric decay of the core makes y(n) c(n) -> 0 for every rational y,
    // which is what turns each certificate into a closed evaluation.
    require(certify_ratio(*ratio).has_value(),
            "find_zero_sum: no geometric decay certificate for the core");

    NormalForm nf = normal_form(*ratio);
    long s = core.start;
    require_nonvanishing_from(nf.p, s, "find_zero_sum: normal-form factor p");

    // Joint nullspace over unknowns (Q_0..Q_D, f_0..f_F) of
    // q f(+1) - r f - p Q = 0, coefficient by coefficient.
    int dq = max_deg;
    int l = std::max(nf.q.degree(), nf.r.degree());
    int df = max_deg + nf.p.degree() + l + 2;
    int nq = dq + 1, nfc = df + 1;
    std::vector<Poly> qcols, fcols;
    int rows = 1;
    for (int j = 0; j < nq; j++) {
        Poly cj = -(nf.p * pow(Poly::var(), (unsigned)j));
        rows = std::max(rows, cj.degree() + 1);
        qcols.push_back(cj);
    }
    for (int j = 0; j < nfc; j++) {
        Poly xj = pow(Poly::var(), (unsigned)j);
        Poly cj = nf.q * xj.shifted(Rat(1)) - nf.r * xj;
        rows = std::max(rows, cj.degree() + 1);
        fcols.push_back(cj);
    }
    RatMat m(rows, RatVec(nq + nfc, Rat(0)));
    for (int j = 0; j < nq; j++)
        for (int i = 0; i <= qcols[j].degree(); i++) m[i][j] = qcols[j].coeff(i);
    for (int j = 0; j < nfc; j++)
        for (int i = 0; i <= fcols[j].degree(); i++) m[i][nq + j] = fcols[j].coeff(i);
    std::vector<RatVec> basis = nullspace(m);

    // Canonical rows: coefficients of Q by descending degree, then f by
    // descending degree, reduced echelon form. Vectors with Q = 0 force
    // f = 0 for a decaying core, so every surviving row carries a relation.
    RatMat table;
    for (const RatVec& v : basis) {
        bool qzero = true;
        for (int j = 0; j < nq; j++)
            if (v[j] != 0) qzero = false;
        if (qzero) continue;
        RatVec row(nq + nfc, Rat(0));
        for (int j = 0; j < nq; j++) row[j] = v[nq - 1 - j];
        for (int j = 0; j < nfc; j++) row[nq + j] = v[nq + nfc - 1 - j];
        table.push_back(row);
    }
    rref(table);

    std::vector<ZeroSum> out;
    for (const RatVec& row : table) {
        std::vector<Rat> qc(nq), fc(nfc);
        for (int j = 0; j < nq; j++) qc[j] = row[nq - 1 - j];
        for (int j = 0; j < nfc; j++) fc[j] = row[nq + nfc - 1 - j];
        Poly qp = Poly::from_coeffs(qc);
        Poly fp = Poly::from_coeffs(fc);
        if (qp.is_zero()) continue;
        Rat cont = qp.content();
        qp = qp * (Rat(1) / cont);
        fp = fp * (Rat(1) / cont);
        RationalFunction y(nf.r * fp, nf.p);
        RationalFunction y1((nf.r * fp).shifted(Rat(1)), nf.p.shifted(Rat(1)));
        require(y1 * *ratio - y == RationalFunction(qp, Poly(Rat(1))),
                "find_zero_sum: certificate identity failed symbolic check");
        check_certificate(core, qp, y, 20);
        require_nonvanishing_from(y.den(), s, "find_zero_sum: certificate denominator");
        Rat closed = -y(Rat(s)) * term_exact(core, s);
        out.push_back(ZeroSum{qp, y, closed});
    }
    return out;
}

void check_certificate(const TermSpec& spec, const Poly& multiplier,
                       const RationalFunction& y, long count) {
    for (long k = spec.start; k <= spec.start + count; k++) {
        require(y.den()(Rat(k)) != 0 && y.den()(Rat(k + 1)) != 0,
                "check_certificate: certificate denominator vanishes");
        Rat tk = term_exact(spec, k);
        Rat tk1 = term_exact(spec, k + 1);
        Rat lhs = multiplier(Rat(k)) * tk;
        Rat rhs = y(Rat(k + 1)) * tk1 - y(Rat(k)) * tk;
        require(lhs == rhs, "check_certificate: identity fails at k=" + std::to_string(k));
    }
}

} // namespace piforge
