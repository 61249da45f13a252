#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"
#include "sequences.hpp"

namespace piforge {

// One sequence factor of a series term: seq(mu*k + sigma)^exp. Negative
// exponents put the factor in the denominator.
struct SeqFactor {
    SeqKind kind;
    int exp = 1;
    long mu = 1;     // index dilation
    long sigma = 0;  // index offset, 0 or -1
    std::string str() const;
    bool operator==(const SeqFactor& o) const;
};

// Symbolic general term
//   numer(k)/denom(k) * base^(+-k) * prod_j factor_j(k),   k >= start.
struct TermSpec {
    Poly numer;
    Poly denom = Poly(Rat(1));
    Rat base = Rat(1);
    bool base_divides = true; // true: term carries base^-k (the a(k)/m^k shape)
    std::vector<SeqFactor> factors;
    long start = 0;

    std::string str() const;
    bool operator==(const TermSpec& o) const;
};

// Structural checks: base nonzero, denom nonzero on k >= start (scanned),
// factor indices nonnegative, negative-exponent factors nonzero at the start
// of the range. Throws Error on violation.
void validate_spec(const TermSpec& spec, long scan_limit = 400);

// Exact rational value of the k-th term.
Rat term_exact(const TermSpec& spec, long k);

// t(k+1)/t(k) including the polynomial part; defined when every factor is
// hypergeometric (AffineBinomial / Catalan). nullopt otherwise.
std::optional<RationalFunction> term_ratio(const TermSpec& spec);

// c(k+1)/c(k) for the non-polynomial core c(k) = base^(+-k) prod factors / denom(k).
std::optional<RationalFunction> core_ratio(const TermSpec& spec);

// True when all factors are AffineBinomial/Catalan powers (exact rational
// term ratio exists): the structural hypergeometric test.
bool is_hypergeometric(const TermSpec& spec);

// Inverse of SeqFactor::str(): "binom(2n,1n)^3", "Catalan@k-1", "Domb^-1", ...
SeqFactor parse_seq_factor(const std::string& text);

} // namespace piforge
