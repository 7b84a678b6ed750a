// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "curvesmith/polyfp.hpp"
#include "curvesmith/rng.hpp"

using namespace curvesmith;
using namespace curvesmith::polyfp;

namespace {

PolyFp from_roots(const Nat& p, const std::vector<Nat>& roots) {
    PolyFp f = constant(p, 1);
    for (const auto& r : roots) f = mul(f, PolyFp(p, {modmath::mod_pos(-Int(r), p), 1}));
    return f;
}

} // namespace

TEST_CASE("arithmetic basics") {
    PolyFp f = from_coeffs(7, {-1, 0, 1}); // X^2 - 1
    PolyFp g = from_coeffs(7, {-1, 1});    // X - 1
    auto [q, r] = divrem(f, g);
    CHECK(q == from_coeffs(7, {1, 1}));
    CHECK(r.is_zero());
    CHECK(eval(f, 3) == Nat(1)); // 9-1 = 8 = 1 mod 7

    // multiplication against schoolbook on larger-than-karatsuba-cutoff sizes
    Rng rng(1);
    Nat p = 1000003;
    for (int round = 0; round < 10; ++round) {
        std::vector<Nat> a, b;
        for (int i = 0; i < 80; ++i) a.push_back(rng.below(p));
        for (int i = 0; i < 45; ++i) b.push_back(rng.below(p));
        PolyFp fa(p, a), fb(p, b);
        PolyFp prod = mul(fa, fb);
        // quadratic reference
        std::vector<Nat> ref(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                ref[i + j] = (ref[i + j] + a[i] * b[j]) % p;
        PolyFp fref(p, ref);
        CHECK(prod == fref);
    }
}

TEST_CASE("mod context reduction matches long division") {
    Rng rng(2);
    Nat p = 999983;
    for (int round = 0; round < 20; ++round) {
        std::vector<Nat> fc, gc;
        int n = 2 + static_cast<int>(rng.below(std::uint64_t(60)));
        for (int i = 0; i <= n; ++i) fc.push_back(rng.below(p));
        fc.back() = 1 + rng.below(p - 1);
        int m = n + static_cast<int>(rng.below(std::uint64_t(n)));
        for (int i = 0; i <= m; ++i) gc.push_back(rng.below(p));
        PolyFp f(p, fc), g(p, gc);
        if (f.degree() < 1 || g.is_zero()) continue;
        ModCtx ctx(f);
        CHECK(ctx.reduce(g) == divrem(g, monic(f)).second);
    }
}

TEST_CASE("gcd_poly") {
    PolyFp zero_p = zero(7);
    PolyFp f = from_coeffs(7, {3, 0, 3}); // 3X^2 + 3
    CHECK(gcd_poly(f, zero_p) == monic(f));
    CHECK(gcd_poly(from_coeffs(7, {-1, 0, 1}), from_coeffs(7, {-1, 1})) ==
          from_coeffs(7, {-1, 1}));
    // gcd((X-3)(X-4), (X-4)(X-5)) = X-4 over F_11
    PolyFp a = from_roots(11, {3, 4}), b = from_roots(11, {4, 5});
    CHECK(gcd_poly(a, b) == from_roots(11, {4}));

    // gcd(f*h, g*h) = monic(h) * gcd(f, g)
    Rng rng(3);
    for (int round = 0; round < 50; ++round) {
        Nat p = 101;
        auto rand_poly = [&](int deg) {
            std::vector<Nat> c;
            for (int i = 0; i <= deg; ++i) c.push_back(rng.below(p));
            c.back() = 1 + rng.below(p - 1);
            return PolyFp(p, c);
        };
        PolyFp f2 = rand_poly(1 + rng.below(std::uint64_t(4)));
        PolyFp g2 = rand_poly(1 + rng.below(std::uint64_t(4)));
        PolyFp h = rand_poly(1 + rng.below(std::uint64_t(3)));
        CHECK(gcd_poly(mul(f2, h), mul(g2, h)) ==
              mul(monic(h), gcd_poly(f2, g2)));
    }
}

TEST_CASE("reduce_mod_p frozen values") {
    // H_-4 = X - 1728 mod 5 -> X + 2
    CHECK(reduce_mod_p({-1728, 1}, 5) == from_coeffs(5, {2, 1}));
    // H_-3 = X mod 7
    CHECK(reduce_mod_p({0, 1}, 7) == from_coeffs(7, {0, 1}));
    // H_-15 mod 11 -> X^2 + 10X + 0  (frozen by long-division oracle)
    CHECK(reduce_mod_p({mpz_class(-121287375), mpz_class(191025), 1}, 11) ==
          from_coeffs(11, {0, 10, 1}));
}

TEST_CASE("roots_of_split frozen examples") {
    CHECK(roots_of_split(from_coeffs(7, {-1, 0, 1}), 0) ==
          std::vector<Nat>{1, 6});
    CHECK(roots_of_split(x_poly(11), 0) == std::vector<Nat>{0});
    CHECK(roots_of_split(from_roots(13, {2, 5, 9}), 42) ==
          std::vector<Nat>{2, 5, 9});
    // X^2 + 1 is irreducible over F_7 (-1 is a non-residue)
    CHECK_THROWS_AS(roots_of_split(from_coeffs(7, {1, 0, 1}), 0), not_split);
}

TEST_CASE("roots_of_split random instances and seed independence") {
    Rng rng(9);
    int instances = 0;
    while (instances < 1000) {
        Nat p = 3 + 2 * rng.below(std::uint64_t(500000));
        if (!modmath::is_prime(p)) continue;
        int deg = 1 + static_cast<int>(rng.below(std::uint64_t(64)));
        std::set<Nat> rootset;
        for (int i = 0; i < deg; ++i) rootset.insert(rng.below(p));
        std::vector<Nat> roots(rootset.begin(), rootset.end());
        PolyFp f = from_roots(p, roots);
        auto found = roots_of_split(f, rng.next());
        CHECK(found == roots);
        for (const auto& r : found) CHECK(eval(f, r) == 0);
        // one_root_of_split agrees
        Nat r1 = one_root_of_split(f, rng.next());
        CHECK(rootset.count(r1) == 1);
        ++instances;
    }

    // seed independence on 100 instances x 5 seeds
    instances = 0;
    while (instances < 100) {
        Nat p = 3 + 2 * rng.below(std::uint64_t(10000));
        if (!modmath::is_prime(p)) continue;
        std::set<Nat> rootset;
        for (int i = 0; i < 12; ++i) rootset.insert(rng.below(p));
        PolyFp f = from_roots(p, {rootset.begin(), rootset.end()});
        auto ref = roots_of_split(f, 1);
        for (std::uint64_t s = 2; s <= 5; ++s) CHECK(roots_of_split(f, s) == ref);
        ++instances;
    }
}
