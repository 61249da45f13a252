#pragma once

#include <optional>
#include <vector>

#include "poly.hpp"
#include "terms.hpp"

namespace piforge {

// Telescoping certificate: Q(k) t(k) = y(k+1) t(k+1) - y(k) t(k) as an exact
// identity (equivalently y(k+1) r(k) - y(k) = Q(k) for the term ratio r).
struct Certificate {
    Poly multiplier;
    RationalFunction y;
};

struct GosperResult {
    bool found = false;
    std::optional<Certificate> cert;
};

// Decide whether multiplier(k) * t(k) has an antidifference of the form
// y(k) t(k) with y rational, for a hypergeometric term with the given ratio
// t(k+1)/t(k); when it does, return the minimal-degree certificate with the
// identity re-verified symbolically. Completeness: found=false proves no such
// antidifference exists.
GosperResult gosper(const RationalFunction& ratio, const Poly& multiplier);

// A telescoping-to-zero relation for the core c(k) (the spec's non-polynomial
// part): sum_{k>=start} q(k) c(k) = closed_value exactly, backed by the
// certificate y and geometric decay of the core.
struct ZeroSum {
    Poly q;
    RationalFunction y;
    Rat closed_value;
};

// Basis of the space of polynomials q with deg q <= max_deg whose series
// against the core telescopes. The spec's numerator polynomial is ignored;
// the basis is canonical (integer-primitive, positive leading coefficient,
// reduced echelon by descending degree). Requires hypergeometric factors and
// a geometric decay certificate (throws otherwise).
std::vector<ZeroSum> find_zero_sum(const TermSpec& core, int max_deg);

// Exact forward-difference spot check of a certificate against real term
// values: multiplier(k) t(k) == y(k+1) t(k+1) - y(k) t(k) for
// k = start .. start+count. Throws on the first failure.
void check_certificate(const TermSpec& spec, const Poly& multiplier,
                       const RationalFunction& y, long count);

} // namespace piforge
