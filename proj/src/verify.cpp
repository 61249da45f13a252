#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "util.hpp"

namespace piforge {

namespace {
std::string append_note(const std::string& base, const std::string& extra) {
    return base.empty() ? extra : base + "; " + extra;
}
} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::ConjectureConsistent: return "conjecture-consistent";
    case Verdict::Failed: return "failed";
    case Verdict::Skipped: return "skipped";
    }
    return "?";
}

VerificationReport verify_identity(const Identity& ident, long digits) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.id = ident.id;
    rep.digits_requested = digits;

    long target = digits;
    if (ident.eval_class == EvalClass::Slow && target > kSlowDigits) {
        target = kSlowDigits;
        rep.notes = "slow series: certified to " + std::to_string(target) + " digits";
    }

    try {
        // Large identities may land far from unit scale, so a first pass can
        // certify fewer absolute digits than requested; rerun with the
        // shortfall added until the enclosure is tight or retries run out.
        long eval_digits = target;
        long certified = 0;
        for (int attempt = 0;; attempt++) {
            EvalReport lhs = evaluate(ident.lhs, eval_digits);
            Ball rhs = const_eval(ident.rhs, digits_to_prec(eval_digits));
            rep.residual = lhs.value - rhs;
            rep.tail_class = lhs.tail_class;
            certified = rep.residual.certified_digits();
            if (certified >= target || !rep.residual.contains_zero() || attempt >= 3) break;
            eval_digits += (target - certified) + 10;
        }
        rep.digits_achieved = std::min(certified, digits);
        bool tight = rep.residual.contains_zero() && certified >= target;
        if (!rep.residual.contains_zero()) {
            rep.verdict = Verdict::Failed;
            rep.notes = append_note(rep.notes, "residual excludes zero");
        } else if (!tight) {
            rep.verdict = Verdict::Failed;
            rep.notes = append_note(rep.notes, "enclosure too wide for requested digits");
        } else if (ident.cls == IdentityClass::Proved) {
            rep.verdict = Verdict::Verified;
        } else {
            rep.verdict = Verdict::ConjectureConsistent;
        }
    } catch (const Error& e) {
        rep.verdict = Verdict::Failed;
        rep.notes = append_note(rep.notes, e.what());
    }

    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerifySummary verify_all(const Catalog& cat, const VerifyAllOptions& opt) {
    std::vector<const Identity*> picked;
    for (const auto& e : cat.entries) {
        if (opt.family && e.family != *opt.family) continue;
        if (opt.cls && e.cls != *opt.cls) continue;
        if (opt.eval && e.eval_class != *opt.eval) continue;
        picked.push_back(&e);
    }
    std::sort(picked.begin(), picked.end(),
              [](const Identity* a, const Identity* b) { return a->id < b->id; });

    VerifySummary sum;
    sum.reports.resize(picked.size());

    int workers = opt.workers > 0 ? opt.workers
                                  : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<int>(workers, (int)picked.size());

    auto run_range = [&](std::atomic<size_t>& next) {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= picked.size()) break;
            sum.reports[i] = verify_identity(*picked[i], opt.digits);
        }
    };
    if (workers <= 1) {
        std::atomic<size_t> next{0};
        run_range(next);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; w++) pool.emplace_back([&] { run_range(next); });
        for (auto& t : pool) t.join();
    }

    for (size_t i = 0; i < picked.size(); i++) {
        const VerificationReport& r = sum.reports[i];
        switch (r.verdict) {
        case Verdict::Verified: sum.verified++; break;
        case Verdict::ConjectureConsistent: sum.consistent++; break;
        case Verdict::Failed: sum.failed++; break;
        case Verdict::Skipped: sum.skipped++; break;
        }
        if (picked[i]->cls == IdentityClass::Proved && r.verdict != Verdict::Verified)
            sum.proved_failure = true;
    }
    return sum;
}

void self_test_catalog(const Catalog& cat, long digits, int workers) {
    VerifyAllOptions opt;
    opt.cls = IdentityClass::Proved;
    opt.digits = digits;
    opt.workers = workers;
    VerifySummary sum = verify_all(cat, opt);
    for (const auto& r : sum.reports)
        if (r.verdict != Verdict::Verified)
            fail("catalog self-test: proved identity '" + r.id + "' did not verify at " +
                 std::to_string(digits) + " digits (" + r.notes + ")");
}

} // namespace piforge
