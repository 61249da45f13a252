#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "series.hpp"

namespace piforge {

enum class Verdict { Verified, ConjectureConsistent, Failed, Skipped };
std::string verdict_name(Verdict v);

struct VerificationReport {
    std::string id;
    long digits_requested = 0;
    long digits_achieved = 0; // certified decimal digits of the residual enclosure
    Ball residual = Ball::zero(64);
    Verdict verdict = Verdict::Skipped;
    TailClass tail_class = TailClass::rigorous;
    double wall_seconds = 0;
    std::string notes;
    bool passed() const {
        return verdict == Verdict::Verified || verdict == Verdict::ConjectureConsistent;
    }
};

// Evaluate lhs - rhs as a ball and classify. A proved identity is Verified
// only when the residual contains zero with radius < 10^-digits; entries that
// are not proved are at best ConjectureConsistent. Slow (conditionally
// convergent) entries are held to min(digits, kSlowDigits) and the shortfall
// is reported in notes.
VerificationReport verify_identity(const Identity& ident, long digits);

inline constexpr long kSlowDigits = 12;

struct VerifyAllOptions {
    std::optional<Family> family;
    std::optional<IdentityClass> cls;
    std::optional<EvalClass> eval;
    long digits = 60;
    int workers = 1;
};

struct VerifySummary {
    std::vector<VerificationReport> reports; // ordered by id
    int verified = 0, consistent = 0, failed = 0, skipped = 0;
    bool proved_failure = false; // any class=proved entry not Verified
};

VerifySummary verify_all(const Catalog& cat, const VerifyAllOptions& opt);

// The catalog-load invariant: every proved entry passes at 30 digits
// (slow entries at kSlowDigits). Throws naming the first offender.
void self_test_catalog(const Catalog& cat, long digits = 30, int workers = 0);

} // namespace piforge
