#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace piforge {

// One finite summation identity with a hypergeometric closed form: for every
// integer n >= n_min (and every admissible rational parameter m when
// parametric), sum_{k=start}^{n} term(k, m) == closed(n, m) exactly.
struct LemmaIdentity {
    std::string id;
    std::string note;        // structural remarks (reconstructed coefficients etc.)
    bool parametric = true;  // false: the identity lives at m = fixed_m only
    Rat fixed_m = Rat(0);
    long start = 0;
    long n_min = 0;
    int m_degree = 1;        // max degree in m of any term coefficient
    std::function<Rat(long, const Rat&)> term;    // term(k, m)
    std::function<Rat(long, const Rat&)> closed;  // closed(n, m)
};

const std::vector<LemmaIdentity>& lemma_registry();
const LemmaIdentity& lemma_by_id(const std::string& id);
std::vector<std::string> lemma_ids();

struct LemmaReport {
    std::string id;
    Rat m;
    long n_max = 0;
    bool pass = false;
    long first_fail_n = -1;  // -1 when pass
    Rat lhs, rhs;            // both sides at the first failing n
};

// Exact partial-sum check for every n_min <= n <= n_max at the given m.
// Reports the first failing n with both sides; never rounds.
LemmaReport verify_lemma(const std::string& id, const Rat& m, long n_max);

// Pins the identity as a polynomial identity in m for each fixed n <= n_cap:
// checks enough distinct rational m samples (degree in m plus margin) that
// exact agreement forces coefficient-wise equality. Fixed-m entries are
// checked at their own m.
bool verify_lemma_symbolic_m(const std::string& id, long n_cap);

} // namespace piforge
