// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef CURVESMITH_MODMATH_HPP
#define CURVESMITH_MODMATH_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>
#include <gmpxx.h>

#include "curvesmith/errors.hpp"

namespace curvesmith::modmath {

/* All scalars are GMP integers.  Nat documents a non-negative contract;
 * it is not enforced by the type. */
using Int = mpz_class;
using Nat = mpz_class;

enum class Primality { composite, prime, probable_prime };

struct Factorization {
    /* primes strictly increasing; product of prime^exp times cofactor
     * reassembles the input.  cofactor == 1 means the factorization is
     * complete; otherwise it has no prime factor <= the trial bound used. */
    std::vector<std::pair<Nat, unsigned>> factors;
    Nat cofactor = 1;

    Nat value() const;
    bool complete() const { return cofactor == 1; }
};

/* Deterministic for n < 3.317e24 (Miller-Rabin over the first 13 primes);
 * Baillie-PSW beyond that, reported as probable_prime. */
Primality primality(const Nat& n);
bool is_prime(const Nat& n);

/* Smallest prime v in [lo, hi] with pred(v), if any. */
std::optional<Nat> next_prime_in(const Nat& lo, const Nat& hi,
                                 const std::function<bool(const Nat&)>& pred);

/* Legendre symbol (a/v) for odd prime v.  Even v is rejected; compositeness
 * is the caller's contract (the value computed is then the Jacobi symbol). */
int legendre(const Nat& a, const Nat& v);

/* Square root of a mod an odd prime v via Tonelli-Shanks, canonicalized to
 * the smaller of the two roots.  The non-residue needed internally is found
 * by trying 2, 3, 5, ... in order, so the result is deterministic. */
Nat sqrt_mod_prime(const Nat& a, const Nat& v);

/* Given x0^2 = a (mod v), v odd prime, v not dividing x0: the unique lift
 * s in [0, v^2) with s^2 = a (mod v^2) and s = x0 (mod v). */
Nat hensel_lift_sqrt(const Nat& a, const Nat& v, const Nat& x0);

/* Unique a in [0, m1*m2) with a = r1 (mod m1), a = r2 (mod m2).
 * Residues may be negative. */
Nat crt_pair(const Int& r1, const Nat& m1, const Int& r2, const Nat& m2);

Nat isqrt(const Nat& n);

/* Trial division up to trial_bound, then Pollard rho with Brent cycling and
 * the deterministic parameter schedule c = 1, 2, 3, ...  Rho gives up on a
 * piece after a step cap, leaving it in the cofactor. */
Factorization factor(const Nat& n, const Nat& trial_bound);

/* factor() with trial bound 1e5, promoting a prime cofactor into the factor
 * list.  Throws too_large only if rho gave up on a composite piece. */
Factorization factor_complete(const Nat& n);

/* n < 0, n = 0 or 1 (mod 4): write n = u^2 * D with D a fundamental
 * discriminant and u maximal. */
std::pair<Nat, Int> squarefree_decompose(const Int& n);

/* Smallest quadratic non-residue mod the odd prime p (tries 2, 3, 4, ...). */
Nat least_nonresidue(const Nat& p);

Nat powmod(const Nat& base, const Nat& exp, const Nat& mod);
Nat invmod(const Nat& a, const Nat& mod);

/* a mod m reduced into [0, m) */
inline Nat mod_pos(const Int& a, const Nat& m) {
    Nat r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace curvesmith::modmath

#endif
