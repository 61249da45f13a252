#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rational.hpp"

namespace piforge {

enum class SeqTag {
    AffineBinomial, // C(a*n+a0, b*n+b0)
    Catalan,        // C(2n,n)/(n+1)
    Domb,           // sum C(n,k)^2 C(2k,k) C(2(n-k),n-k)
    Franel3,        // sum C(n,k)^3
    Franel4,        // sum C(n,k)^4
    AperyBeta,      // sum C(n,k)^2 C(n+k,k)
    CooperCo,       // sum C(n,k)^2 C(n+k,k) C(2k,n)
    Zagier,         // sum C(n,j) C(2j,j) C(2(n-j),n-j)
    Trinomial,      // [x^n] (x^2 + b x + c)^n
    TrinomialStride, // Trinomial(b,c) at index stride*n
    SConv,          // sum C(n,j)^2 T_j(b,c) T_{n-j}(b,c)
    ConjA324,       // sum C(n,k) C(n+2k,2k) C(2k,k) (-324)^(n-k)
    ConjB23,        // sum C(n,k) C(n+2k,2k) C(2k,k) (-8/27)^k
    ConjC576,       // sum 5^k C(2k,k)^2 C(2(n-k),n-k)^2 / C(n,k)
};

struct SeqKind {
    SeqTag tag = SeqTag::Catalan;
    long a = 0, a0 = 0, b = 0, b0 = 0; // AffineBinomial parameters
    long tb = 0, tc = 0;               // Trinomial-family parameters
    long stride = 1;                   // TrinomialStride only (2 or 3)

    static SeqKind affine_binomial(long a, long a0, long b, long b0);
    static SeqKind simple(SeqTag tag);
    static SeqKind trinomial(long b, long c);
    static SeqKind trinomial_stride(long b, long c, long stride);
    static SeqKind sconv(long b, long c);

    // C(2n,n) and friends, as the common cases
    static SeqKind central_binom() { return affine_binomial(2, 0, 1, 0); }
    static SeqKind central_binom_shift() { return affine_binomial(2, 0, 1, 1); }

    bool operator==(const SeqKind& o) const;
    bool integer_valued() const; // false for ConjB23, ConjC576
    std::string str() const;     // canonical key, also the catalog syntax
};

// Parse the canonical syntax produced by SeqKind::str, e.g.
// "binom(2n+0,1n+0)", "Catalan", "Trinomial(8,-2)", "SConv(1,25)".
SeqKind parse_seq_kind(const std::string& text);

struct SeqTable {
    SeqKind kind;
    std::vector<Rat> values; // index 0..n_max
    enum class Provenance { definition, recurrence } provenance;
};

// Exact value straight from the definitional sum (the oracle path).
Rat seq_value(const SeqKind& kind, long n);

// Whether a registered recurrence fast path exists for this kind.
bool seq_has_recurrence(const SeqKind& kind);

// Table of values 0..n_max; uses the recurrence fast path when registered
// (provenance says which path produced the table).
SeqTable seq_batch(const SeqKind& kind, long n_max);

struct CrosscheckReport {
    bool applicable = false; // kind has both paths
    bool equal = false;
    long first_mismatch = -1;
    std::string detail;
};

// Definition-vs-recurrence agreement on [0, n_max].
CrosscheckReport seq_crosscheck(const SeqKind& kind, long n_max);

// Shared memoized prefix (values 0..n_max at least); snapshots are immutable
// and safe to hold across threads. Built by the fast path, which the test
// suite cross-checks against definitions.
std::shared_ptr<const std::vector<Rat>> seq_prefix(const SeqKind& kind, long n_max);

} // namespace piforge
