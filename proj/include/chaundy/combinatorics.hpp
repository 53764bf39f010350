#pragma once

#include "chaundy/rational.hpp"

namespace chaundy {

inline Int factorial(Index n) {
    Int r = 1;
    for (Index i = 2; i <= n; ++i) r *= i;
    return r;
}

/// C(n, k) with the summation-friendly convention C(n, k) = 0 for k > n.
/// Multiplicative scheme: the partial product after step i is C(n-k+i, i),
/// so every intermediate division is exact.
inline Int binomial(Index n, Index k) {
    if (k > n) return 0;
    if (n - k < k) k = n - k;
    Int acc = 1;
    for (Index i = 1; i <= k; ++i) {
        acc *= Int(n - k + i);
        acc /= Int(i);
    }
    return acc;
}

/// Binomial with arbitrary rational upper argument:
/// C(x, k) = x(x-1)...(x-k+1) / k!, and C(x, 0) = 1.
inline Rational gen_binomial(const Rational& x, Index k) {
    Rational acc = 1;
    for (Index i = 0; i < k; ++i) acc *= x - Int(i);
    return acc / Rational(factorial(k));
}

/// z^(n) = z(z+1)...(z+n-1); the empty product for n = 0.
inline Rational rising_factorial(const Rational& z, Index n) {
    Rational acc = 1;
    for (Index j = 0; j < n; ++j) acc *= z + Int(j);
    return acc;
}

} // namespace chaundy
