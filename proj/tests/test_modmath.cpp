// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "curvesmith/modmath.hpp"
#include "curvesmith/rng.hpp"

using namespace curvesmith;
using namespace curvesmith::modmath;

TEST_CASE("is_prime on small and frozen values") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(1009)); // trial division by d <= 31 confirms
    CHECK_FALSE(is_prime(1007)); // 19 * 53
    // against a sieve up to 10^4
    std::vector<bool> sieve(10000, true);
    sieve[0] = sieve[1] = false;
    for (int i = 2; i < 10000; ++i)
        if (sieve[i])
            for (int j = 2 * i; j < 10000; j += i) sieve[j] = false;
    for (int i = 0; i < 10000; ++i) CHECK(is_prime(i) == sieve[i]);
    // 2^61-1 is within the proven Miller-Rabin witness range
    mpz_class m61 = (mpz_class(1) << 61) - 1;
    CHECK(primality(m61) == Primality::prime);
    // 2^89-1 is beyond it: Baillie-PSW path, flagged as probable
    mpz_class m89 = (mpz_class(1) << 89) - 1;
    CHECK(primality(m89) == Primality::probable_prime);
    CHECK(primality(m89 * m89) == Primality::composite);
    CHECK(primality(m89 + 2) == Primality::composite);
}

TEST_CASE("next_prime_in") {
    auto always = [](const Nat&) { return true; };
    CHECK(next_prime_in(2, 10, always) == Nat(2));
    CHECK_FALSE(next_prime_in(24, 28, always).has_value());
    // smallest prime v in [2,5] with 1009 a square mod v
    auto qr = [](const Nat& v) {
        return mpz_odd_p(v.get_mpz_t()) && legendre(1009, v) == 1;
    };
    CHECK(next_prime_in(2, 5, qr) == Nat(3));
    CHECK(next_prime_in(90, 100, always) == Nat(97));
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(7, 7) == 0);
    CHECK_THROWS_AS(legendre(3, 8), precondition_error);

    // against exhaustive square search for all odd primes v <= 200
    for (int v = 3; v <= 200; v += 2) {
        if (!is_prime(v)) continue;
        std::set<int> squares;
        for (int x = 1; x < v; ++x) squares.insert(x * x % v);
        for (int a = 0; a < v; ++a) {
            int expected = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
            CHECK(legendre(a, v) == expected);
        }
    }
}

TEST_CASE("sqrt_mod_prime") {
    CHECK(sqrt_mod_prime(2, 7) == Nat(3)); // canonical (smaller) root
    CHECK(sqrt_mod_prime(0, 5) == Nat(0));
    CHECK(sqrt_mod_prime(4, 5) == Nat(2));
    CHECK_THROWS_AS(sqrt_mod_prime(3, 7), non_residue);

    Rng rng(7);
    int done = 0;
    while (done < 500) {
        Nat v = 3 + 2 * rng.below(std::uint64_t(5000));
        if (!is_prime(v)) continue;
        Nat a = rng.below(v);
        if (legendre(a, v) == -1) continue;
        Nat x = sqrt_mod_prime(a, v);
        CHECK(mod_pos(x * x - a, v) == 0);
        CHECK(x <= v - x);
        ++done;
    }
}

TEST_CASE("hensel_lift_sqrt") {
    CHECK(hensel_lift_sqrt(4036, 3, 2) == Nat(2));
    CHECK(hensel_lift_sqrt(2, 7, 3) == Nat(10));
    CHECK(hensel_lift_sqrt(1, 5, 1) == Nat(1));
    CHECK_THROWS_AS(hensel_lift_sqrt(49, 7, 7), singular_lift);

    // chained with sqrt_mod_prime: s^2 = a (mod v^2) exactly
    Rng rng(11);
    int done = 0;
    while (done < 1000) {
        Nat v = 3 + 2 * rng.below(std::uint64_t(10000));
        if (!is_prime(v)) continue;
        Nat a = 1 + rng.below(Nat(v * v - 1));
        if (mod_pos(a, v) == 0) continue;
        if (legendre(a, v) == -1) continue;
        Nat x = sqrt_mod_prime(a, v);
        Nat s = hensel_lift_sqrt(a, v, x);
        CHECK(mod_pos(s * s - a, v * v) == 0);
        CHECK(mod_pos(s - x, v) == 0);
        CHECK(s < v * v);
        ++done;
    }
}

TEST_CASE("crt_pair") {
    CHECK(crt_pair(2, 9, 0, 5) == Nat(20));
    CHECK(crt_pair(0, 3, 0, 7) == Nat(0));
    CHECK(crt_pair(1, 2, 2, 3) == Nat(5));
    CHECK_THROWS_AS(crt_pair(1, 6, 2, 9), not_coprime);
    // negative residues reduce first
    CHECK(crt_pair(-7, 9, -5, 5) == Nat(20));

    for (int m1 = 2; m1 <= 50; ++m1)
        for (int m2 = m1 + 1; m2 <= 50; ++m2) {
            if (mpz_class g; (mpz_gcd(g.get_mpz_t(), mpz_class(m1).get_mpz_t(),
                                      mpz_class(m2).get_mpz_t()),
                              g != 1))
                continue;
            for (int r1 = 0; r1 < m1; r1 += 3)
                for (int r2 = 0; r2 < m2; r2 += 5) {
                    Nat a = crt_pair(r1, m1, r2, m2);
                    CHECK(a < Nat(m1) * m2);
                    CHECK(mod_pos(a, m1) == r1);
                    CHECK(mod_pos(a, m2) == r2);
                }
        }
}

TEST_CASE("isqrt") {
    CHECK(isqrt(0) == Nat(0));
    CHECK(isqrt(4035) == Nat(63));
    CHECK(isqrt(4096) == Nat(64));
    Rng rng(3);
    for (int i = 0; i < 100000; ++i) {
        mpz_class n = rng.below(mpz_class(1) << 256);
        Nat r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("factor") {
    auto f = factor(990, 5);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::make_pair(Nat(2), 1u));
    CHECK(f.factors[1] == std::make_pair(Nat(3), 2u));
    CHECK(f.factors[2] == std::make_pair(Nat(5), 1u));
    CHECK(f.cofactor == 11);

    auto one = factor(1, 100);
    CHECK(one.factors.empty());
    CHECK(one.cofactor == 1);

    auto p97 = factor(97, 100);
    REQUIRE(p97.factors.size() == 1);
    CHECK(p97.factors[0] == std::make_pair(Nat(97), 1u));
    CHECK(p97.cofactor == 1);

    for (int n = 1; n <= 100000; n += 1) {
        auto fn = factor(n, 400);
        CHECK(fn.value() == n);
    }
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        mpz_class n = 1 + rng.below(mpz_class(1) << 64);
        auto fn = factor_complete(n);
        CHECK(fn.value() == n);
        CHECK(fn.complete());
        for (auto& [p, e] : fn.factors) CHECK(is_prime(p));
    }
}

TEST_CASE("squarefree_decompose") {
    auto [u1, d1] = squarefree_decompose(-3636);
    CHECK(u1 == 3);
    CHECK(d1 == -404);
    auto [u2, d2] = squarefree_decompose(-3411);
    CHECK(u2 == 3);
    CHECK(d2 == -379);
    auto [u3, d3] = squarefree_decompose(-4);
    CHECK(u3 == 1);
    CHECK(d3 == -4);
    CHECK_THROWS_AS(squarefree_decompose(-2), not_discriminant);
    CHECK_THROWS_AS(squarefree_decompose(5), not_discriminant);

    auto fundamental = [](const mpz_class& D) {
        if (D >= 0) return false;
        unsigned long r = mpz_fdiv_ui(D.get_mpz_t(), 4);
        if (r == 1) {
            auto f = factor_complete(-D);
            for (auto& [p, e] : f.factors)
                if (e > 1) return false;
            return true;
        }
        if (r != 0) return false;
        mpz_class k = -D / 4; // D = -4k, k squarefree, -k = 2,3 mod 4
        unsigned long kr = mpz_fdiv_ui(k.get_mpz_t(), 4);
        if (kr != 1 && kr != 2) return false; // -k mod 4 must be 3 or 2
        auto f = factor_complete(k);
        for (auto& [p, e] : f.factors)
            if (e > 1) return false;
        return true;
    };
    for (long n = -4; n >= -100000; --n) {
        unsigned long r = mpz_fdiv_ui(mpz_class(n).get_mpz_t(), 4);
        if (r != 0 && r != 1) continue;
        auto [u, D] = squarefree_decompose(n);
        CHECK(u * u * D == n);
        CHECK(fundamental(D));
    }
}
