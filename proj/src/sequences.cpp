#include "sequences.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "util.hpp"

namespace piforge {

SeqKind SeqKind::affine_binomial(long a, long a0, long b, long b0) {
    SeqKind k;
    k.tag = SeqTag::AffineBinomial;
    k.a = a;
    k.a0 = a0;
    k.b = b;
    k.b0 = b0;
    return k;
}

SeqKind SeqKind::simple(SeqTag tag) {
    SeqKind k;
    k.tag = tag;
    return k;
}

SeqKind SeqKind::trinomial(long b, long c) {
    SeqKind k;
    k.tag = SeqTag::Trinomial;
    k.tb = b;
    k.tc = c;
    return k;
}

SeqKind SeqKind::trinomial_stride(long b, long c, long stride) {
    require(stride == 2 || stride == 3, "TrinomialStride: stride must be 2 or 3");
    SeqKind k;
    k.tag = SeqTag::TrinomialStride;
    k.tb = b;
    k.tc = c;
    k.stride = stride;
    return k;
}

SeqKind SeqKind::sconv(long b, long c) {
    SeqKind k;
    k.tag = SeqTag::SConv;
    k.tb = b;
    k.tc = c;
    return k;
}

bool SeqKind::operator==(const SeqKind& o) const {
    return tag == o.tag && a == o.a && a0 == o.a0 && b == o.b && b0 == o.b0 &&
           tb == o.tb && tc == o.tc && stride == o.stride;
}

bool SeqKind::integer_valued() const {
    return tag != SeqTag::ConjB23 && tag != SeqTag::ConjC576;
}

namespace {

std::string affine_part(long coef, long off) {
    std::ostringstream s;
    s << coef << "n";
    if (off > 0) s << "+" << off;
    if (off < 0) s << off;
    return s.str();
}

} // namespace

std::string SeqKind::str() const {
    std::ostringstream s;
    switch (tag) {
    case SeqTag::AffineBinomial:
        s << "binom(" << affine_part(a, a0) << "," << affine_part(b, b0) << ")";
        break;
    case SeqTag::Catalan: s << "Catalan"; break;
    case SeqTag::Domb: s << "Domb"; break;
    case SeqTag::Franel3: s << "Franel3"; break;
    case SeqTag::Franel4: s << "Franel4"; break;
    case SeqTag::AperyBeta: s << "AperyBeta"; break;
    case SeqTag::CooperCo: s << "CooperCo"; break;
    case SeqTag::Zagier: s << "Zagier"; break;
    case SeqTag::Trinomial: s << "Trinomial(" << tb << "," << tc << ")"; break;
    case SeqTag::TrinomialStride:
        s << "Trinomial" << stride << "n(" << tb << "," << tc << ")";
        break;
    case SeqTag::SConv: s << "SConv(" << tb << "," << tc << ")"; break;
    case SeqTag::ConjA324: s << "ConjA324"; break;
    case SeqTag::ConjB23: s << "ConjB23"; break;
    case SeqTag::ConjC576: s << "ConjC576"; break;
    }
    return s.str();
}

namespace {

// parse "2n", "2n+1", "2n-1", "1n+0"
void parse_affine(const std::string& t, long& coef, long& off) {
    size_t n = t.find('n');
    require(n != std::string::npos, "sequence kind: bad affine part '" + t + "'");
    std::string c = t.substr(0, n);
    if (c.empty() || c == "+")
        coef = 1;
    else if (c == "-")
        coef = -1;
    else
        coef = std::stol(c);
    std::string rest = t.substr(n + 1);
    off = rest.empty() ? 0 : std::stol(rest);
}

std::vector<long> parse_long_args(const std::string& inside, size_t want,
                                  const std::string& what) {
    std::vector<long> out;
    std::string cur;
    for (char ch : inside) {
        if (ch == ',') {
            out.push_back(std::stol(cur));
            cur.clear();
        } else if (!std::isspace((unsigned char)ch)) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stol(cur));
    require(out.size() == want, what + ": expected " + std::to_string(want) + " arguments");
    return out;
}

} // namespace

SeqKind parse_seq_kind(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace((unsigned char)c)) text += c;
    require(!text.empty(), "empty sequence kind");

    auto args_of = [&](const std::string& name) {
        require(text.size() > name.size() + 1 && text.back() == ')',
                "sequence kind '" + raw + "': malformed argument list");
        return text.substr(name.size() + 1, text.size() - name.size() - 2);
    };

    if (text.rfind("binom(", 0) == 0) {
        std::string inside = args_of("binom");
        size_t comma = std::string::npos;
        int depth = 0;
        for (size_t i = 0; i < inside.size(); i++) {
            if (inside[i] == '(') depth++;
            if (inside[i] == ')') depth--;
            if (inside[i] == ',' && depth == 0) {
                comma = i;
                break;
            }
        }
        require(comma != std::string::npos, "binom kind: missing comma");
        long a, a0, b, b0;
        parse_affine(inside.substr(0, comma), a, a0);
        parse_affine(inside.substr(comma + 1), b, b0);
        return SeqKind::affine_binomial(a, a0, b, b0);
    }
    if (text == "Catalan") return SeqKind::simple(SeqTag::Catalan);
    if (text == "Domb") return SeqKind::simple(SeqTag::Domb);
    if (text == "Franel3") return SeqKind::simple(SeqTag::Franel3);
    if (text == "Franel4") return SeqKind::simple(SeqTag::Franel4);
    if (text == "AperyBeta") return SeqKind::simple(SeqTag::AperyBeta);
    if (text == "CooperCo") return SeqKind::simple(SeqTag::CooperCo);
    if (text == "Zagier") return SeqKind::simple(SeqTag::Zagier);
    if (text == "ConjA324") return SeqKind::simple(SeqTag::ConjA324);
    if (text == "ConjB23") return SeqKind::simple(SeqTag::ConjB23);
    if (text == "ConjC576") return SeqKind::simple(SeqTag::ConjC576);
    if (text.rfind("Trinomial2n(", 0) == 0) {
        auto v = parse_long_args(args_of("Trinomial2n"), 2, "Trinomial2n");
        return SeqKind::trinomial_stride(v[0], v[1], 2);
    }
    if (text.rfind("Trinomial3n(", 0) == 0) {
        auto v = parse_long_args(args_of("Trinomial3n"), 2, "Trinomial3n");
        return SeqKind::trinomial_stride(v[0], v[1], 3);
    }
    if (text.rfind("Trinomial(", 0) == 0) {
        auto v = parse_long_args(args_of("Trinomial"), 2, "Trinomial");
        return SeqKind::trinomial(v[0], v[1]);
    }
    if (text.rfind("SConv(", 0) == 0) {
        auto v = parse_long_args(args_of("SConv"), 2, "SConv");
        return SeqKind::sconv(v[0], v[1]);
    }
    fail("unknown sequence kind '" + raw + "'");
}

// ---------------------------------------------------------------------------
// definitional values

namespace {

Int trinomial_def(long b, long c, long n) {
    // [x^n] (x^2 + b x + c)^n = sum_j C(n,2j) C(2j,j) b^(n-2j) c^j
    Int total = 0;
    for (long j = 0; 2 * j <= n; j++) {
        Int t = binomial(n, 2 * j) * binomial(2 * j, j);
        t *= int_pow(Int(b), n - 2 * j);
        t *= int_pow(Int(c), j);
        total += t;
    }
    return total;
}

Int exact_div(const Int& num, const Int& den, const char* what);

Rat seq_value_def(const SeqKind& kind, long n) {
    switch (kind.tag) {
    case SeqTag::AffineBinomial:
        return Rat(binomial(kind.a * n + kind.a0, kind.b * n + kind.b0));
    case SeqTag::Catalan: {
        Int num = binomial(2 * n, n);
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), Int(n + 1).get_mpz_t());
        require(r == 0, "Catalan: C(2n,n) not divisible by n+1");
        return Rat(q);
    }
    case SeqTag::Domb: {
        Int total = 0;
        for (long k = 0; k <= n; k++) {
            Int t = binomial(n, k);
            t *= t;
            t *= binomial(2 * k, k);
            t *= binomial(2 * (n - k), n - k);
            total += t;
        }
        return Rat(total);
    }
    case SeqTag::Franel3:
    case SeqTag::Franel4: {
        int e = kind.tag == SeqTag::Franel3 ? 3 : 4;
        Int total = 0;
        for (long k = 0; k <= n; k++) {
            Int c = binomial(n, k);
            Int t = c;
            for (int i = 1; i < e; i++) t *= c;
            total += t;
        }
        return Rat(total);
    }
    case SeqTag::AperyBeta: {
        Int total = 0;
        for (long k = 0; k <= n; k++) {
            Int t = binomial(n, k);
            t *= t;
            t *= binomial(n + k, k);
            total += t;
        }
        return Rat(total);
    }
    case SeqTag::CooperCo: {
        Int total = 0;
        for (long k = 0; k <= n; k++) {
            Int t = binomial(n, k);
            t *= t;
            t *= binomial(n + k, k);
            t *= binomial(2 * k, n);
            total += t;
        }
        return Rat(total);
    }
    case SeqTag::Zagier: {
        Int total = 0;
        for (long j = 0; j <= n; j++) {
            Int t = binomial(n, j);
            t *= binomial(2 * j, j);
            t *= binomial(2 * (n - j), n - j);
            total += t;
        }
        return Rat(total);
    }
    case SeqTag::Trinomial:
        return Rat(trinomial_def(kind.tb, kind.tc, n));
    case SeqTag::TrinomialStride:
        return Rat(trinomial_def(kind.tb, kind.tc, kind.stride * n));
    case SeqTag::SConv: {
        Int total = 0;
        for (long j = 0; j <= n; j++) {
            Int t = binomial(n, j);
            t *= t;
            t *= trinomial_def(kind.tb, kind.tc, j);
            t *= trinomial_def(kind.tb, kind.tc, n - j);
            total += t;
        }
        return Rat(total);
    }
    case SeqTag::ConjA324: {
        // Terms T_k = binom(n,k) binom(n+2k,2k) binom(2k,k) (-324)^(n-k);
        // consecutive ratio (n-k)(n+2k+1)(n+2k+2) / ((k+1)^3 (-324)) keeps
        // each step to one multiply and one exact division.
        Int t = int_pow(Int(-324), n);
        Int total = t;
        for (long k = 0; k < n; k++) {
            t *= Int(n - k) * Int(n + 2 * k + 1) * Int(n + 2 * k + 2);
            t = exact_div(t, Int(k + 1) * Int(k + 1) * Int(k + 1) * Int(-324), "ConjA324");
            total += t;
        }
        return Rat(total);
    }
    case SeqTag::ConjB23: {
        // Same shape over the common denominator 27^n so the loop stays in
        // integers: T_k = binom(n,k) binom(n+2k,2k) binom(2k,k) (-8)^k 27^(n-k),
        // ratio (n-k)(n+2k+1)(n+2k+2)(-8) / ((k+1)^3 27).
        Int t = int_pow(Int(27), n);
        Int total = t;
        for (long k = 0; k < n; k++) {
            t *= Int(n - k) * Int(n + 2 * k + 1) * Int(n + 2 * k + 2) * Int(-8);
            t = exact_div(t, Int(k + 1) * Int(k + 1) * Int(k + 1) * Int(27), "ConjB23");
            total += t;
        }
        return rat(total, int_pow(Int(27), n));
    }
    case SeqTag::ConjC576: {
        // 1/binom(n,k) = k!(n-k)!/n!, so over the common denominator n! the
        // terms T_k = 5^k binom(2k,k)^2 binom(2(n-k),n-k)^2 k!(n-k)! are
        // integers with ratio 5(2k+1)^2(n-k) / ((k+1)(2(n-k)-1)^2).
        Int cb = binomial(2 * n, n);
        Int t = cb * cb * factorial((unsigned long)n);
        Int total = t;
        for (long k = 0; k < n; k++) {
            long m = n - k;
            t *= Int(5) * Int(2 * k + 1) * Int(2 * k + 1) * Int(m);
            t = exact_div(t, Int(k + 1) * Int(2 * m - 1) * Int(2 * m - 1), "ConjC576");
            total += t;
        }
        return rat(total, factorial((unsigned long)n));
    }
    }
    fail("seq_value: unhandled kind");
}

Int exact_div(const Int& num, const Int& den, const char* what) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    require(r == 0, std::string(what) + ": recurrence step not integral");
    return q;
}

// Registered recurrences, each cross-checked against the definitional sums
// by the test suite; none is trusted standalone.
std::vector<Rat> batch_recurrence(const SeqKind& kind, long n_max) {
    std::vector<Rat> v;
    v.reserve((size_t)n_max + 1);
    switch (kind.tag) {
    case SeqTag::Domb: {
        // (n+2)^3 D(n+2) = 2(2n+3)(5n^2+15n+12) D(n+1) - 64 (n+1)^3 D(n)
        std::vector<Int> d{Int(1), Int(4)};
        for (long n = 0; n + 2 <= n_max; n++) {
            Int lhs = 2 * Int(2 * n + 3) * Int(5 * n * n + 15 * n + 12) * d[n + 1] -
                      64 * int_pow(Int(n + 1), 3) * d[n];
            d.push_back(exact_div(lhs, int_pow(Int(n + 2), 3), "Domb"));
        }
        for (long n = 0; n <= n_max; n++) v.push_back(Rat(d[n]));
        return v;
    }
    case SeqTag::Franel4: {
        // (n+2)^3 f(n+2) = 2(2n+3)(3n^2+9n+7) f(n+1) + 4(n+1)(4n+3)(4n+5) f(n)
        std::vector<Int> f{Int(1), Int(2)};
        for (long n = 0; n + 2 <= n_max; n++) {
            Int lhs = 2 * Int(2 * n + 3) * Int(3 * n * n + 9 * n + 7) * f[n + 1] +
                      4 * Int(n + 1) * Int(4 * n + 3) * Int(4 * n + 5) * f[n];
            f.push_back(exact_div(lhs, int_pow(Int(n + 2), 3), "Franel4"));
        }
        for (long n = 0; n <= n_max; n++) v.push_back(Rat(f[n]));
        return v;
    }
    case SeqTag::Trinomial:
    case SeqTag::TrinomialStride: {
        // n T(n) = (2n-1) b T(n-1) - (n-1)(b^2 - 4c) T(n-2)
        long b = kind.tb, c = kind.tc;
        long top = kind.tag == SeqTag::TrinomialStride ? kind.stride * n_max : n_max;
        std::vector<Int> t{Int(1)};
        if (top >= 1) t.push_back(Int(b));
        Int disc = Int(b) * b - 4 * Int(c);
        for (long n = 2; n <= top; n++) {
            Int lhs = Int(2 * n - 1) * b * t[n - 1] - Int(n - 1) * disc * t[n - 2];
            t.push_back(exact_div(lhs, Int(n), "Trinomial"));
        }
        if (kind.tag == SeqTag::TrinomialStride) {
            for (long n = 0; n <= n_max; n++) v.push_back(Rat(t[kind.stride * n]));
        } else {
            for (long n = 0; n <= n_max; n++) v.push_back(Rat(t[n]));
        }
        return v;
    }
    case SeqTag::SConv: {
        // convolution over the trinomial fast path
        SeqKind tri = SeqKind::trinomial(kind.tb, kind.tc);
        std::vector<Rat> t = batch_recurrence(tri, n_max);
        for (long n = 0; n <= n_max; n++) {
            Int total = 0;
            for (long j = 0; j <= n; j++) {
                Int w = binomial(n, j);
                w *= w;
                total += w * t[j].get_num() * t[n - j].get_num();
            }
            v.push_back(Rat(total));
        }
        return v;
    }
    default: fail("batch_recurrence: no recurrence for " + kind.str());
    }
}

std::mutex g_seq_mutex;
std::map<std::string, std::shared_ptr<const std::vector<Rat>>> g_seq_cache;

} // namespace

Rat seq_value(const SeqKind& kind, long n) {
    require(n >= 0, "seq_value: n must be >= 0");
    return seq_value_def(kind, n);
}

bool seq_has_recurrence(const SeqKind& kind) {
    switch (kind.tag) {
    case SeqTag::Domb:
    case SeqTag::Franel4:
    case SeqTag::Trinomial:
    case SeqTag::TrinomialStride:
    case SeqTag::SConv: return true;
    default: return false;
    }
}

SeqTable seq_batch(const SeqKind& kind, long n_max) {
    require(n_max >= 0, "seq_batch: n_max must be >= 0");
    SeqTable t;
    t.kind = kind;
    if (seq_has_recurrence(kind)) {
        t.values = batch_recurrence(kind, n_max);
        t.provenance = SeqTable::Provenance::recurrence;
    } else {
        t.values.reserve((size_t)n_max + 1);
        for (long n = 0; n <= n_max; n++) t.values.push_back(seq_value_def(kind, n));
        t.provenance = SeqTable::Provenance::definition;
    }
    return t;
}

CrosscheckReport seq_crosscheck(const SeqKind& kind, long n_max) {
    CrosscheckReport r;
    if (!seq_has_recurrence(kind)) {
        r.applicable = false;
        r.detail = "not-applicable: no recurrence registered for " + kind.str();
        return r;
    }
    r.applicable = true;
    std::vector<Rat> fast = batch_recurrence(kind, n_max);
    for (long n = 0; n <= n_max; n++) {
        Rat def = seq_value_def(kind, n);
        if (fast[n] != def) {
            r.equal = false;
            r.first_mismatch = n;
            r.detail = kind.str() + " disagrees at n=" + std::to_string(n) +
                       ": recurrence " + rat_string(fast[n]) + " vs definition " +
                       rat_string(def);
            return r;
        }
    }
    r.equal = true;
    r.detail = kind.str() + " equal on [0," + std::to_string(n_max) + "]";
    return r;
}

std::shared_ptr<const std::vector<Rat>> seq_prefix(const SeqKind& kind, long n_max) {
    require(n_max >= 0, "seq_prefix: n_max must be >= 0");
    std::string key = kind.str();
    {
        std::lock_guard<std::mutex> lock(g_seq_mutex);
        auto it = g_seq_cache.find(key);
        if (it != g_seq_cache.end() && (long)it->second->size() > n_max) return it->second;
    }
    // grow generously to amortize repeated extensions
    long target = std::max(n_max, (long)64);
    {
        std::lock_guard<std::mutex> lock(g_seq_mutex);
        auto it = g_seq_cache.find(key);
        if (it != g_seq_cache.end()) target = std::max(target, 2 * (long)it->second->size());
    }
    auto table = std::make_shared<std::vector<Rat>>(seq_batch(kind, target).values);
    std::lock_guard<std::mutex> lock(g_seq_mutex);
    auto& slot = g_seq_cache[key];
    if (!slot || (long)slot->size() < (long)table->size()) slot = std::move(table);
    return slot;
}

} // namespace piforge
