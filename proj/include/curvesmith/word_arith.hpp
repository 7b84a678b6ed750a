// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

// Single-word kernels behind the arbitrary-precision interfaces.  Exhaustive
// point-count sweeps and dense polynomial arithmetic spend nearly all their
// time here, so these avoid mpz round trips entirely.

#ifndef CURVESMITH_WORD_ARITH_HPP
#define CURVESMITH_WORD_ARITH_HPP

#include <cstdint>

namespace curvesmith::word {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(u128(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/* Jacobi symbol (a/n) for odd n >= 3, by the binary algorithm. */
inline int jacobi(u64 a, u64 n) {
    a %= n;
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u64 r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        u64 tmp = a; a = n; n = tmp;
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

inline u64 invmod(u64 a, u64 m) {
    // extended Euclid; caller guarantees gcd(a, m) = 1
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

} // namespace curvesmith::word

#endif
