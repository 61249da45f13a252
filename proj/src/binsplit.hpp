#pragma once

#include <functional>

#include "rational.hpp"

namespace piforge {

// Binary splitting for sums of the form
//   sum_{k=a}^{b-1} W(k) * c(k),  c(a) = 1,  c(k+1)/c(k) = u(k)/v(k),
// returning exact integers with  partial sum = T/Q  and  c(b)/c(a) = U/Q.
// All three callbacks must return exact integers; v(k) must be nonzero.
struct BinsplitResult {
    Int T, Q, U;
};

BinsplitResult binsplit(long a, long b, const std::function<Int(long)>& W,
                        const std::function<Int(long)>& u,
                        const std::function<Int(long)>& v);

} // namespace piforge
