#include "lemmas.hpp"

#include <utility>

#include "poly.hpp"
#include "util.hpp"

namespace piforge {

namespace {

Rat c2(long n) { return Rat(binomial(Int(2 * n), Int(n))); }
Rat c3(long n) { return Rat(binomial(Int(3 * n), Int(n))); }
Rat c42(long n) { return Rat(binomial(Int(4 * n), Int(2 * n))); }
Rat c63(long n) { return Rat(binomial(Int(6 * n), Int(3 * n))); }
Rat sq(const Rat& x) { return x * x; }
Rat cube(const Rat& x) { return x * x * x; }
Rat pw5(const Rat& x) { return sq(sq(x)) * x; }

// Interpolating polynomial through (xs[i], ys[i]) by divided differences.
Poly fit_poly(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    size_t n = xs.size();
    std::vector<Rat> coef = ys;
    for (size_t lvl = 1; lvl < n; ++lvl)
        for (size_t i = n - 1; i >= lvl; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - lvl]);
            if (i == lvl) break;
        }
    Poly p(Rat(0));
    Poly basis{Rat(1)};
    for (size_t i = 0; i < n; ++i) {
        p = p + basis * coef[i];
        basis = basis * (Poly::var() - Poly(xs[i]));
    }
    return p;
}

using Fn = std::function<Rat(long, const Rat&)>;

LemmaIdentity make(std::string id, long start, long n_min, int mdeg, Fn term, Fn closed,
                   std::string note = "") {
    LemmaIdentity L;
    L.id = std::move(id);
    L.note = std::move(note);
    L.start = start;
    L.n_min = n_min;
    L.m_degree = mdeg;
    L.term = std::move(term);
    L.closed = std::move(closed);
    return L;
}

LemmaIdentity make_fixed(std::string id, const Rat& m, long start, long n_min, Fn term, Fn closed,
                         std::string note = "") {
    LemmaIdentity L = make(std::move(id), start, n_min, 0, std::move(term), std::move(closed),
                           std::move(note));
    L.parametric = false;
    L.fixed_m = m;
    return L;
}

std::vector<LemmaIdentity> build_registry() {
    std::vector<LemmaIdentity> reg;

    // ---- central-binomial cube over m^k: weights 1, k, k^2, and the
    //      (k+1)^3-denominator companions ----
    auto cb3_core = [](long k, const Rat& m) -> Rat { return cube(c2(k)) / rat_pow(m, k); };
    reg.push_back(make(
        "cb3-w0", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return cb3_core(k, m) * ((Rat(64) - m) * cube(K) + 96 * sq(K) + 48 * K + 8);
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return Rat(8) * cube(2 * N + 1) * cube(c2(n)) / rat_pow(m, n);
        }));
    reg.push_back(make(
        "cb3-w1", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return K * cb3_core(k, m) *
                   ((Rat(64) - m) * cube(K) + (96 + m) * sq(K) + 48 * K + 8);
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return Rat(8) * N * cube(2 * N + 1) * cube(c2(n)) / rat_pow(m, n);
        }));
    reg.push_back(make(
        "cb3-w2", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return sq(K) * cb3_core(k, m) *
                   ((Rat(64) - m) * cube(K) + (96 + 2 * m) * sq(K) + (Rat(48) - m) * K + 8);
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return Rat(8) * sq(N) * cube(2 * N + 1) * cube(c2(n)) / rat_pow(m, n);
        }));
    reg.push_back(make(
        "cb3-c0", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return cb3_core(k, m) / cube(K + 1) *
                   ((Rat(64) - m) * cube(K) + (96 - 3 * m) * sq(K) + (48 - 3 * m) * K +
                    (Rat(8) - m));
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return -m + Rat(8) * cube(2 * N + 1) * cube(c2(n)) / (cube(N + 1) * rat_pow(m, n));
        }));
    reg.push_back(make(
        "cb3-c1", 0, 0, 2,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (512 - 72 * m + sq(m)) * cube(K) + (768 - 176 * m + 3 * sq(m)) * sq(K) +
                    (384 - 144 * m + 3 * sq(m)) * K + (64 - 40 * m + sq(m));
            return K * cb3_core(k, m) / cube(K + 1) * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return 8 * m - Rat(8) * cube(2 * N + 1) * (m - 8 * N + m * N) * cube(c2(n)) /
                               (cube(N + 1) * rat_pow(m, n));
        }));
    {
        Fn closed = [](long n, const Rat& m) -> Rat {
            Rat N(n);
            Rat inner = m * (m + 8) - 40 * m * N * (N + 1) + 2 * sq(m) * N + 64 * sq(N) +
                        sq(m) * sq(N);
            return Rat(8) * cube(2 * N + 1) * inner * cube(c2(n)) /
                       (cube(N + 1) * rat_pow(m, n)) -
                   8 * m * (m + 8);
        };
        Fn term = [closed](long k, const Rat& m) -> Rat {
            if (k == 0) return Rat(0);
            std::vector<Rat> xs, ys;
            for (long j = 1; j <= 4; ++j) {
                xs.push_back(Rat(j));
                Rat diff = closed(j, m) - closed(j - 1, m);
                ys.push_back(diff * cube(Rat(j + 1)) * rat_pow(m, j) / (sq(Rat(j)) * cube(c2(j))));
            }
            Poly q = fit_poly(xs, ys);
            Rat K(k);
            return sq(K) * q(K) * cube(c2(k)) / (cube(K + 1) * rat_pow(m, k));
        };
        reg.push_back(make("cb3-c2", 0, 0, 3, term, closed,
                           "cubic multiplier reconstructed from the closed form by "
                           "interpolation at k=1..4; every partial sum is checked exactly"));
    }

    // ---- m^k over k^j * central-binomial cube ----
    auto invcb3_core = [](long k, const Rat& m) -> Rat { return rat_pow(m, k) / cube(c2(k)); };
    reg.push_back(make(
        "invcb3-j1", 1, 1, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (m - 64) * cube(K) + (2 * m + 96) * sq(K) + (m - 48) * K + 8;
            return invcb3_core(k, m) / K * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return -m + sq(N + 1) * rat_pow(m, n + 1) / cube(c2(n));
        }));
    reg.push_back(make(
        "invcb3-j2", 1, 1, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (m - 64) * cube(K) + (m + 96) * sq(K) - 48 * K + 8;
            return invcb3_core(k, m) / sq(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return -m + (N + 1) * rat_pow(m, n + 1) / cube(c2(n));
        }));
    reg.push_back(make(
        "invcb3-j3", 1, 1, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (m - 64) * cube(K) + 96 * sq(K) - 48 * K + 8;
            return invcb3_core(k, m) / cube(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            return -m + rat_pow(m, n + 1) / cube(c2(n));
        }));
    reg.push_back(make(
        "invcb3-r1", 1, 1, 2,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (280 * m - sq(m) - 13824) * cube(K) + (56 * m + 20736) * sq(K) -
                    (8 * m + 10368) * K + 1728;
            return (K + 1) * invcb3_core(k, m) / cube(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return m * (m - 432) + (216 * (N + 2) - m * (N + 1)) * rat_pow(m, n + 1) / cube(c2(n));
        }));
    reg.push_back(make(
        "invcb3-r2", 1, 1, 3,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (2985984 - 60480 * m + 280 * sq(m) - cube(m)) * cube(K) -
                    (4478976 + 58752 * m + 8 * sq(m)) * sq(K) + (2239488 + 15552 * m) * K -
                    (1728 * m + 373248);
            return sq(K + 1) * invcb3_core(k, m) / cube(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            Rat inner = 186624 * (N + 1) - 216 * m * (sq(N) + 1) + sq(m) * (2 * N + 1) -
                        648 * m * N + sq(m) * sq(N) + 46656 * sq(N);
            return m * (sq(m) - 216 * m + 186624) - rat_pow(m, n + 1) * inner / cube(c2(n));
        }));

    // ---- m^k over k^j * central-binomial^2 * C(3k,k) ----
    auto invc2c3_core = [](long k, const Rat& m) -> Rat { return rat_pow(m, k) / (sq(c2(k)) * c3(k)); };
    reg.push_back(make(
        "invc2c3-j1", 1, 1, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (m - 108) * cube(K) + (2 * m + 162) * sq(K) + (m - 78) * K + 12;
            return invc2c3_core(k, m) / K * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return -m + sq(N + 1) * rat_pow(m, n + 1) / (sq(c2(n)) * c3(n));
        }));
    reg.push_back(make(
        "invc2c3-j2", 1, 1, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (m - 108) * cube(K) + (m + 162) * sq(K) - 78 * K + 12;
            return invc2c3_core(k, m) / sq(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return -m + (N + 1) * rat_pow(m, n + 1) / (sq(c2(n)) * c3(n));
        }));
    reg.push_back(make(
        "invc2c3-j3", 1, 1, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (m - 108) * cube(K) + 162 * sq(K) - 78 * K + 12;
            return invc2c3_core(k, m) / cube(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            return -m + rat_pow(m, n + 1) / (sq(c2(n)) * c3(n));
        }));
    reg.push_back(make(
        "invc2c3-r1", 1, 1, 2,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (468 * m - sq(m) - 38880) * cube(K) + (90 * m + 58320) * sq(K) -
                    (12 * m + 28080) * K + 4320;
            return (K + 1) * invc2c3_core(k, m) / cube(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return m * (m - 720) +
                   (360 * (N + 2) - m * (N + 1)) * rat_pow(m, n + 1) / (sq(c2(n)) * c3(n));
        }));
    {
        Fn closed = [](long n, const Rat& m) -> Rat {
            Rat N(n);
            Rat inner = sq(m) * sq(N + 1) - 366 * m * N * (N + 3) + 129600 * sq(N) +
                        518400 * (N + 1) - 372 * m;
            return m * (sq(m) - 372 * m + 518400) -
                   rat_pow(m, n + 1) * inner / (sq(c2(n)) * c3(n));
        };
        Fn term = [closed](long k, const Rat& m) -> Rat {
            std::vector<Rat> xs, ys;
            for (long j = 1; j <= 4; ++j) {
                xs.push_back(Rat(j));
                Rat diff = closed(j, m) - closed(j - 1, m);
                ys.push_back(diff * cube(Rat(j)) * sq(c2(j)) * c3(j) /
                             (sq(Rat(j + 1)) * rat_pow(m, j)));
            }
            Poly q = fit_poly(xs, ys);
            Rat K(k);
            return sq(K + 1) * q(K) * rat_pow(m, k) / (cube(K) * sq(c2(k)) * c3(k));
        };
        reg.push_back(make("invc2c3-r2", 1, 1, 3, term, closed,
                           "cubic multiplier reconstructed from the closed form by "
                           "interpolation at k=1..4; every partial sum is checked exactly"));
    }

    // ---- m^k over k^j * central-binomial^2 * C(4k,2k) ----
    auto invc2c4_core = [](long k, const Rat& m) -> Rat { return rat_pow(m, k) / (sq(c2(k)) * c42(k)); };
    reg.push_back(make(
        "invc2c4-j1", 1, 1, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (m - 256) * cube(K) + (2 * m + 384) * sq(K) + (m - 176) * K + 24;
            return invc2c4_core(k, m) / K * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return -m + sq(N + 1) * rat_pow(m, n + 1) / (sq(c2(n)) * c42(n));
        }));
    reg.push_back(make(
        "invc2c4-j2", 1, 1, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (m - 256) * cube(K) + (m + 384) * sq(K) - 176 * K + 24;
            return invc2c4_core(k, m) / sq(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return -m + (N + 1) * rat_pow(m, n + 1) / (sq(c2(n)) * c42(n));
        }));
    reg.push_back(make(
        "invc2c4-j3", 1, 1, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (m - 256) * cube(K) + 384 * sq(K) - 176 * K + 24;
            return invc2c4_core(k, m) / cube(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            return -m + rat_pow(m, n + 1) / (sq(c2(n)) * c42(n));
        }));
    reg.push_back(make(
        "invc2c4-r1", 1, 1, 2,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (1096 * m - sq(m) - 215040) * cube(K) + (200 * m + 322560) * sq(K) -
                    (24 * m + 147840) * K + 20160;
            return (K + 1) * invc2c4_core(k, m) / cube(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            return m * (m - 1680) +
                   (840 * (N + 2) - m * (N + 1)) * rat_pow(m, n + 1) / (sq(c2(n)) * c42(n));
        }));
    reg.push_back(make(
        "invc2c4-r2", 1, 1, 3,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            Rat p = (180633600 - 928832 * m + 1128 * sq(m) - cube(m)) * cube(K) -
                    (270950400 + 853120 * m + 24 * sq(m)) * sq(K) +
                    (124185600 + 209088 * m) * K - (16934400 + 20160 * m);
            return sq(K + 1) * invc2c4_core(k, m) / cube(K) * p;
        },
        [](long n, const Rat& m) -> Rat {
            Rat N(n);
            Rat inner = sq(m) * sq(N + 1) - 872 * m * N * (N + 3) + 705600 * N * (N + 4) -
                        904 * m + 2822400;
            return m * (sq(m) - 904 * m + 2822400) -
                   rat_pow(m, n + 1) * inner / (sq(c2(n)) * c42(n));
        }));

    // ---- central-binomial^2 * C(3k,k) over m^k ----
    auto c2c3_core = [](long k, const Rat& m) -> Rat { return sq(c2(k)) * c3(k) / rat_pow(m, k); };
    auto c2c3_rhs = [](long n) -> Rat { // 6(2n+1)(3n+1)(3n+2) * binomials
        Rat N(n);
        return Rat(6) * (2 * N + 1) * (3 * N + 1) * (3 * N + 2) * sq(c2(n)) * c3(n);
    };
    reg.push_back(make(
        "c2c3-w0", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return c2c3_core(k, m) *
                   ((Rat(108) - m) * cube(K) + 162 * sq(K) + 78 * K + 12);
        },
        [=](long n, const Rat& m) -> Rat { return c2c3_rhs(n) / rat_pow(m, n); }));
    reg.push_back(make(
        "c2c3-w1", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return K * c2c3_core(k, m) *
                   ((Rat(108) - m) * cube(K) + (162 + m) * sq(K) + 78 * K + 12);
        },
        [=](long n, const Rat& m) -> Rat { return Rat(n) * c2c3_rhs(n) / rat_pow(m, n); }));
    reg.push_back(make(
        "c2c3-w2", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return sq(K) * c2c3_core(k, m) *
                   ((Rat(108) - m) * cube(K) + (162 + 2 * m) * sq(K) + (Rat(78) - m) * K + 12);
        },
        [=](long n, const Rat& m) -> Rat { return sq(Rat(n)) * c2c3_rhs(n) / rat_pow(m, n); }));
    reg.push_back(make(
        "c2c3-c0", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return c2c3_core(k, m) / sq(K + 1) *
                   ((Rat(108) - m) * cube(K) + (162 - 2 * m) * sq(K) + (Rat(78) - m) * K + 12);
        },
        [=](long n, const Rat& m) -> Rat {
            Rat N(n);
            return c2c3_rhs(n) / (sq(N + 1) * rat_pow(m, n));
        }));
    reg.push_back(make(
        "c2c3-c1", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return K * c2c3_core(k, m) / sq(K + 1) *
                   ((Rat(108) - m) * cube(K) + (162 - m) * sq(K) + (78 + m) * K + (m + 12));
        },
        [=](long n, const Rat& m) -> Rat {
            Rat N(n);
            return N * c2c3_rhs(n) / (sq(N + 1) * rat_pow(m, n));
        }));

    // ---- central-binomial^2 * C(4k,2k) over m^k ----
    auto c2c4_core = [](long k, const Rat& m) -> Rat { return sq(c2(k)) * c42(k) / rat_pow(m, k); };
    auto c2c4_rhs = [](long n) -> Rat {
        Rat N(n);
        return Rat(8) * (2 * N + 1) * (4 * N + 1) * (4 * N + 3) * sq(c2(n)) * c42(n);
    };
    reg.push_back(make(
        "c2c4-w0", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return c2c4_core(k, m) *
                   ((Rat(256) - m) * cube(K) + 384 * sq(K) + 176 * K + 24);
        },
        [=](long n, const Rat& m) -> Rat { return c2c4_rhs(n) / rat_pow(m, n); }));
    reg.push_back(make(
        "c2c4-w1", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return K * c2c4_core(k, m) *
                   ((Rat(256) - m) * cube(K) + (384 + m) * sq(K) + 176 * K + 24);
        },
        [=](long n, const Rat& m) -> Rat { return Rat(n) * c2c4_rhs(n) / rat_pow(m, n); }));
    reg.push_back(make(
        "c2c4-w2", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return sq(K) * c2c4_core(k, m) *
                   ((Rat(256) - m) * cube(K) + (384 + 2 * m) * sq(K) + (Rat(176) - m) * K + 24);
        },
        [=](long n, const Rat& m) -> Rat { return sq(Rat(n)) * c2c4_rhs(n) / rat_pow(m, n); }));
    reg.push_back(make(
        "c2c4-c0", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return c2c4_core(k, m) / sq(K + 1) *
                   ((Rat(256) - m) * cube(K) + (384 - 2 * m) * sq(K) + (Rat(176) - m) * K + 24);
        },
        [=](long n, const Rat& m) -> Rat {
            Rat N(n);
            return c2c4_rhs(n) / (sq(N + 1) * rat_pow(m, n));
        }));
    reg.push_back(make(
        "c2c4-c1", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return K * c2c4_core(k, m) / sq(K + 1) *
                   ((Rat(256) - m) * cube(K) + (384 - m) * sq(K) + (176 + m) * K + (m + 24));
        },
        [=](long n, const Rat& m) -> Rat {
            Rat N(n);
            return N * c2c4_rhs(n) / (sq(N + 1) * rat_pow(m, n));
        }));

    // ---- C(2k,k) * C(3k,k) * C(6k,3k) over m^k ----
    auto c3c6_core = [](long k, const Rat& m) -> Rat { return c2(k) * c3(k) * c63(k) / rat_pow(m, k); };
    auto c3c6_rhs = [](long n) -> Rat {
        Rat N(n);
        return Rat(24) * (2 * N + 1) * (6 * N + 1) * (6 * N + 5) * c2(n) * c3(n) * c63(n);
    };
    reg.push_back(make(
        "c3c6-w0", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return c3c6_core(k, m) *
                   ((Rat(1728) - m) * cube(K) + 2592 * sq(K) + 1104 * K + 120);
        },
        [=](long n, const Rat& m) -> Rat { return c3c6_rhs(n) / rat_pow(m, n); }));
    reg.push_back(make(
        "c3c6-w1", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return K * c3c6_core(k, m) *
                   ((Rat(1728) - m) * cube(K) + (2592 + m) * sq(K) + 1104 * K + 120);
        },
        [=](long n, const Rat& m) -> Rat { return Rat(n) * c3c6_rhs(n) / rat_pow(m, n); }));
    reg.push_back(make(
        "c3c6-w2", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return sq(K) * c3c6_core(k, m) *
                   ((Rat(1728) - m) * cube(K) + (2592 + 2 * m) * sq(K) + (Rat(1104) - m) * K +
                    120);
        },
        [=](long n, const Rat& m) -> Rat { return sq(Rat(n)) * c3c6_rhs(n) / rat_pow(m, n); }));
    reg.push_back(make(
        "c3c6-c0", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return c3c6_core(k, m) / sq(K + 1) *
                   ((Rat(1728) - m) * cube(K) + (2592 - 2 * m) * sq(K) + (Rat(1104) - m) * K +
                    120);
        },
        [=](long n, const Rat& m) -> Rat {
            Rat N(n);
            return c3c6_rhs(n) / (sq(N + 1) * rat_pow(m, n));
        }));
    reg.push_back(make(
        "c3c6-c1", 0, 0, 1,
        [=](long k, const Rat& m) -> Rat {
            Rat K(k);
            return K * c3c6_core(k, m) / sq(K + 1) *
                   ((Rat(1728) - m) * cube(K) + (2592 - m) * sq(K) + (1104 + m) * K + (m + 120));
        },
        [=](long n, const Rat& m) -> Rat {
            Rat N(n);
            return N * c3c6_rhs(n) / (sq(N + 1) * rat_pow(m, n));
        }));

    // ---- alternating 1/(k^j * central-binomial^5) chain (fixed sign base) ----
    auto alt5_core = [](long k) -> Rat {
        Rat s = (k % 2 == 0) ? Rat(1) : Rat(-1);
        return s / pw5(c2(k));
    };
    auto alt5_boundary = [](long n, int e) -> Rat { // (-1)^n (n+1)^e / C(2n,n)^5
        Rat s = (n % 2 == 0) ? Rat(1) : Rat(-1);
        return s * rat_pow(Rat(n + 1), e) / pw5(c2(n));
    };
    reg.push_back(make_fixed(
        "alt5-j5", Rat(-1), 1, 1,
        [=](long k, const Rat&) -> Rat {
            Rat K(k);
            Rat p = 1025 * pw5(K) - 2560 * sq(sq(K)) + 2560 * cube(K) - 1280 * sq(K) + 320 * K -
                    32;
            return alt5_core(k) / pw5(K) * p;
        },
        [=](long n, const Rat&) -> Rat { return Rat(-1) + alt5_boundary(n, 0); }));
    reg.push_back(make_fixed(
        "alt5-j4", Rat(-1), 1, 1,
        [=](long k, const Rat&) -> Rat {
            Rat K(k);
            Rat p = 1025 * pw5(K) - 2559 * sq(sq(K)) + 2560 * cube(K) - 1280 * sq(K) + 320 * K -
                    32;
            return alt5_core(k) / sq(sq(K)) * p;
        },
        [=](long n, const Rat&) -> Rat { return Rat(-1) + alt5_boundary(n, 1); }));
    reg.push_back(make_fixed(
        "alt5-j3", Rat(-1), 1, 1,
        [=](long k, const Rat&) -> Rat {
            Rat K(k);
            Rat p = 1025 * pw5(K) - 2558 * sq(sq(K)) + 2561 * cube(K) - 1280 * sq(K) + 320 * K -
                    32;
            return alt5_core(k) / cube(K) * p;
        },
        [=](long n, const Rat&) -> Rat { return Rat(-1) + alt5_boundary(n, 2); }));
    reg.push_back(make_fixed(
        "alt5-j2", Rat(-1), 1, 1,
        [=](long k, const Rat&) -> Rat {
            Rat K(k);
            Rat p = 1025 * pw5(K) - 2557 * sq(sq(K)) + 2563 * cube(K) - 1279 * sq(K) + 320 * K -
                    32;
            return alt5_core(k) / sq(K) * p;
        },
        [=](long n, const Rat&) -> Rat { return Rat(-1) + alt5_boundary(n, 3); }));
    reg.push_back(make_fixed(
        "alt5-j1", Rat(-1), 1, 1,
        [=](long k, const Rat&) -> Rat {
            Rat K(k);
            Rat p = 1025 * pw5(K) - 2556 * sq(sq(K)) + 2566 * cube(K) - 1276 * sq(K) + 321 * K -
                    32;
            return alt5_core(k) / K * p;
        },
        [=](long n, const Rat&) -> Rat { return Rat(-1) + alt5_boundary(n, 4); }));

    // ---- 48^k over central-binomial * C(4k,2k), the strided pair ----
    auto c4str_core = [](long k) -> Rat { return rat_pow(Rat(48), k) / (c2(k) * c42(k)); };
    reg.push_back(make_fixed(
        "c4str-j1", Rat(48), 1, 1,
        [=](long k, const Rat&) -> Rat {
            Rat K(k);
            return c4str_core(k) / K * (4 * sq(K) - 28 * K + 3);
        },
        [](long n, const Rat&) -> Rat {
            Rat N(n);
            return Rat(12) - 12 * (N + 1) * rat_pow(Rat(48), n) / (c2(n) * c42(n));
        }));
    reg.push_back(make_fixed(
        "c4str-j0", Rat(48), 1, 1,
        [=](long k, const Rat&) -> Rat {
            Rat K(k);
            return c4str_core(k) * (4 * sq(K) - 40 * K - 9);
        },
        [](long n, const Rat&) -> Rat {
            Rat N(n);
            return Rat(12) - 12 * sq(N + 1) * rat_pow(Rat(48), n) / (c2(n) * c42(n));
        },
        "closed-form sign normalized so the n=1 instance holds"));

    return reg;
}

} // namespace

const std::vector<LemmaIdentity>& lemma_registry() {
    static const std::vector<LemmaIdentity> reg = build_registry();
    return reg;
}

const LemmaIdentity& lemma_by_id(const std::string& id) {
    for (const auto& L : lemma_registry())
        if (L.id == id) return L;
    fail("unknown lemma id '" + id + "'");
}

std::vector<std::string> lemma_ids() {
    std::vector<std::string> ids;
    for (const auto& L : lemma_registry()) ids.push_back(L.id);
    return ids;
}

LemmaReport verify_lemma(const std::string& id, const Rat& m, long n_max) {
    const LemmaIdentity& L = lemma_by_id(id);
    if (L.parametric)
        require(m != 0, "lemma '" + id + "': m must be nonzero");
    else
        require(m == L.fixed_m,
                "lemma '" + id + "' is fixed at m = " + rat_string(L.fixed_m));
    require(n_max >= L.n_min, "lemma '" + id + "': n_max below the identity's first n");

    LemmaReport rep;
    rep.id = id;
    rep.m = m;
    rep.n_max = n_max;
    rep.pass = true;
    Rat acc(0);
    for (long n = L.start; n <= n_max; ++n) {
        acc += L.term(n, m);
        if (n < L.n_min) continue;
        Rat rhs = L.closed(n, m);
        if (acc != rhs) {
            rep.pass = false;
            rep.first_fail_n = n;
            rep.lhs = acc;
            rep.rhs = rhs;
            return rep;
        }
    }
    return rep;
}

bool verify_lemma_symbolic_m(const std::string& id, long n_cap) {
    const LemmaIdentity& L = lemma_by_id(id);
    long n_max = std::max(n_cap, L.n_min);
    if (!L.parametric) return verify_lemma(id, L.fixed_m, n_max).pass;
    // Enough samples to pin a polynomial identity in m of the degree this
    // entry can reach after clearing m^n.
    long samples = n_cap + L.m_degree + 2;
    for (long j = 0; j < samples; ++j) {
        long v = j / 2 + 1;
        Rat m = (j % 2 == 0) ? Rat(v) : Rat(-v);
        if (!verify_lemma(id, m, n_max).pass) return false;
    }
    return true;
}

} // namespace piforge
