#include "binsplit.hpp"

#include "util.hpp"

namespace piforge {

namespace {

BinsplitResult split(long a, long b, const std::function<Int(long)>& W,
                     const std::function<Int(long)>& u,
                     const std::function<Int(long)>& v) {
    BinsplitResult r;
    if (b - a == 1) {
        r.Q = v(a);
        require(r.Q != 0, "binsplit: v(k) = 0 inside range");
        r.U = u(a);
        r.T = W(a) * r.Q;
        return r;
    }
    long m = a + (b - a) / 2;
    BinsplitResult L = split(a, m, W, u, v);
    BinsplitResult R = split(m, b, W, u, v);
    r.T = L.T * R.Q + L.U * R.T;
    r.Q = L.Q * R.Q;
    r.U = L.U * R.U;
    return r;
}

} // namespace

BinsplitResult binsplit(long a, long b, const std::function<Int(long)>& W,
                        const std::function<Int(long)>& u,
                        const std::function<Int(long)>& v) {
    require(b > a, "binsplit: empty range");
    return split(a, b, W, u, v);
}

} // namespace piforge
