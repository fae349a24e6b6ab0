#pragma once

#include <gmpxx.h>
#include <string>

namespace brst {

// Exact rational coefficients. mpq_class keeps gcd(num,den)=1 and den>0 after
// every arithmetic operation; only the (num,den) constructor needs an explicit
// canonicalize, which rational() takes care of.
using Scalar = mpq_class;

inline Scalar rational(long num, long den = 1) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline bool isZero(const Scalar& s) { return sgn(s) == 0; }

} // namespace brst
