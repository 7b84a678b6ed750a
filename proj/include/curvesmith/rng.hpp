// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef CURVESMITH_RNG_HPP
#define CURVESMITH_RNG_HPP

#include <cstdint>
#include <gmpxx.h>

namespace curvesmith {

/* splitmix64: tiny, fast, and identical on every platform.  All randomized
 * searches in the library draw from this so that a (seed -> result) pair is
 * reproducible bit-for-bit. */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /* uniform in [0, n) by rejection from whole 64-bit words */
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    /* uniform in [0, n) for arbitrary-precision n, by bit rejection */
    mpz_class below(const mpz_class& n) {
        std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        mpz_class v;
        do {
            v = 0;
            for (std::size_t got = 0; got < bits; got += 64) {
                v <<= 64;
                v += mpz_class(static_cast<unsigned long>(next()));
            }
            v >>= (64 - bits % 64) % 64;
        } while (v >= n);
        return v;
    }

  private:
    std::uint64_t state_;
};

} // namespace curvesmith

#endif
