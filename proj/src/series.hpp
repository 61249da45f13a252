#pragma once

#include <optional>
#include <string>

#include "ball.hpp"
#include "terms.hpp"

namespace piforge {

// How the tail bound attached to an evaluation was obtained. "rigorous" means
// a proved geometric-ratio certificate (or the certified alternating
// transform); "ratio-assumed" means an empirical window ratio with a 2x
// safety margin, honest but not a proof.
enum class TailClass { rigorous, ratio_assumed };
std::string tail_class_name(TailClass c);

struct EvalReport {
    Ball value = Ball::zero(64); // placeholder precision until assigned
    long terms_used = 0;
    Rat tail_bound;
    TailClass tail_class = TailClass::rigorous;
    double wall_seconds = 0;
    std::string notes;
};

// Exact sum of terms k = start .. N, by direct accumulation of exact
// rationals.
Rat partial_sum_naive(const TermSpec& spec, long N);

// The same value through binary splitting; requires is_hypergeometric(spec).
// Agrees with partial_sum_naive bit for bit.
Rat partial_sum_binsplit(const TermSpec& spec, long N);

// Exact sum of terms k = start .. N; binary splitting when the term is
// hypergeometric, the naive loop otherwise.
Rat partial_sum_exact(const TermSpec& spec, long N);

// Certificate that |t(k+1)/t(k)| <= rho < 1 for every k >= K1, established
// by a coefficient-positivity test on rho^2 den^2 - num^2 shifted to K1.
struct RatioCertificate {
    Rat rho;
    long K1 = 0;
};
std::optional<RatioCertificate> certify_ratio(const RationalFunction& term_ratio);

// Bound on |sum_{k > K0} t(k)|: rigorous from a ratio certificate when every
// factor is AffineBinomial/Catalan-shaped, else an empirical window ratio
// with a 2x safety margin. Throws when no decay can be established.
struct TailInfo {
    Rat bound;
    TailClass cls = TailClass::ratio_assumed;
};
TailInfo tail_bound(const TermSpec& spec, long K0);

// Sum the series to at least `digits` correct decimal digits: schedules the
// term count against a tail bound (rigorous when a ratio certificate exists,
// empirical-with-margin otherwise), then sums exactly and returns a Ball
// enclosure. Slowly convergent alternating central-binomial series are routed
// through a certified sequence transformation instead of direct summation.
EvalReport evaluate(const TermSpec& spec, long digits);

} // namespace piforge
