// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "curvesmith/modmath.hpp"

#include <algorithm>
#include <array>

#include "curvesmith/word_arith.hpp"

namespace curvesmith::modmath {

Nat Factorization::value() const {
    Nat v = cofactor;
    for (const auto& [p, e] : factors) {
        Nat pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

namespace {

bool miller_rabin_witness(const Nat& n, const Nat& a) {
    // returns true if a proves n composite
    Nat nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    Nat d = nm1 >> s;
    Nat x = powmod(a % n, d, n);
    if (x == 1 || x == nm1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return false;
        if (x == 1) return true;
    }
    return true;
}

/* Strong Lucas test with Selfridge's parameter choice (method A). */
bool strong_lucas_probable_prime(const Nat& n) {
    // find D = 5, -7, 9, -11, ... with (D/n) = -1
    Int D = 5;
    while (true) {
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0 && abs(D) != n) return false;
        D = D > 0 ? Int(-(D + 2)) : Int(-(D - 2));
    }
    Int P = 1, Q = (1 - D) / 4;
    Nat d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    // Lucas sequence by binary ladder on (U, V, Q^k)
    Int U = 1, V = P, Qk = Q;
    unsigned long bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    auto red = [&](Int& x) { x = mod_pos(x, n); };
    red(U); red(V); red(Qk);
    for (long i = static_cast<long>(bits) - 2; i >= 0; --i) {
        Int U2 = mod_pos(U * V, n);
        Int V2 = mod_pos(V * V - 2 * Qk, n);
        Qk = mod_pos(Qk * Qk, n);
        U = U2; V = V2;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            Int Un = U * P + V;
            if (mpz_odd_p(Un.get_mpz_t())) Un += n;
            Un /= 2;
            Int Vn = V * P + U * D;
            if (mpz_odd_p(Vn.get_mpz_t())) Vn += n;
            Vn /= 2;
            U = mod_pos(Un, n); V = mod_pos(Vn, n);
            Qk = mod_pos(Qk * Q, n);
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod_pos(V * V - 2 * Qk, n);
        if (V == 0) return true;
        Qk = mod_pos(Qk * Qk, n);
    }
    return false;
}

const std::array<unsigned, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                             19, 23, 29, 31, 37, 41};

// Miller-Rabin over the first 13 primes is a proof below this bound.
const Nat kDeterministicBound("3317044064679887385961981");

} // namespace

Primality primality(const Nat& n) {
    if (n < 2) return Primality::composite;
    for (unsigned w : kWitnesses) {
        if (n == w) return Primality::prime;
        if (mpz_divisible_ui_p(n.get_mpz_t(), w))
            return Primality::composite;
    }
    for (unsigned w : kWitnesses)
        if (miller_rabin_witness(n, Nat(w))) return Primality::composite;
    if (n < kDeterministicBound) return Primality::prime;
    if (mpz_perfect_square_p(n.get_mpz_t())) return Primality::composite;
    if (!strong_lucas_probable_prime(n)) return Primality::composite;
    return Primality::probable_prime;
}

bool is_prime(const Nat& n) { return primality(n) != Primality::composite; }

std::optional<Nat> next_prime_in(const Nat& lo, const Nat& hi,
                                 const std::function<bool(const Nat&)>& pred) {
    if (lo > hi) return std::nullopt;
    Nat v = lo < 2 ? Nat(2) : lo;
    while (v <= hi) {
        if (is_prime(v) && pred(v)) return v;
        mpz_nextprime(v.get_mpz_t(), v.get_mpz_t());
    }
    return std::nullopt;
}

int legendre(const Nat& a, const Nat& v) {
    if (v < 3 || mpz_even_p(v.get_mpz_t()))
        throw precondition_error("legendre: modulus must be an odd prime");
    return mpz_jacobi(a.get_mpz_t(), v.get_mpz_t());
}

Nat sqrt_mod_prime(const Nat& a, const Nat& v) {
    Nat r = mod_pos(a, v);
    if (r == 0) return 0;
    if (legendre(r, v) == -1) throw non_residue();

    Nat x;
    if (mpz_fdiv_ui(v.get_mpz_t(), 4) == 3) {
        x = powmod(r, (v + 1) / 4, v);
    } else {
        // Tonelli-Shanks
        Nat q = v - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        q >>= s;
        Nat z = least_nonresidue(v);
        Nat c = powmod(z, q, v);
        x = powmod(r, (q + 1) / 2, v);
        Nat t = powmod(r, q, v);
        unsigned long m = s;
        while (t != 1) {
            Nat t2 = t;
            unsigned long i = 0;
            while (t2 != 1) {
                t2 = t2 * t2 % v;
                ++i;
            }
            Nat b = c;
            for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % v;
            x = x * b % v;
            c = b * b % v;
            t = t * c % v;
            m = i;
        }
    }
    Nat other = v - x;
    return std::min(x, other);
}

Nat hensel_lift_sqrt(const Nat& a, const Nat& v, const Nat& x0) {
    if (mpz_divisible_p(x0.get_mpz_t(), v.get_mpz_t())) throw singular_lift();
    if (mod_pos(x0 * x0 - a, v) != 0)
        throw precondition_error("hensel_lift_sqrt: x0 is not a root mod v");
    Nat vv = v * v;
    Nat s = mod_pos(x0 - (x0 * x0 - a) * invmod(2 * x0, vv), vv);
    return s;
}

Nat crt_pair(const Int& r1, const Nat& m1, const Int& r2, const Nat& m2) {
    Nat g;
    mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    if (g != 1) throw not_coprime();
    Nat a1 = mod_pos(r1, m1), a2 = mod_pos(r2, m2);
    Nat inv = invmod(mod_pos(m1, m2), m2);
    return a1 + m1 * mod_pos((a2 - a1) * inv, m2);
}

Nat isqrt(const Nat& n) {
    if (n < 0) throw precondition_error("isqrt of a negative number");
    Nat r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace {

/* Brent's variant of Pollard rho with x -> x^2 + c; returns a nontrivial
 * factor of odd composite n, or 0 if the step cap ran out on every c. */
Nat pollard_rho_brent(const Nat& n) {
    const unsigned long step_cap = 1UL << 22;
    for (unsigned long c = 1;; ++c) {
        Nat y = 2, r = 1, q = 1, g = 1, x, ys;
        unsigned long steps = 0;
        while (g == 1 && steps < step_cap) {
            x = y;
            for (Nat i = 0; i < r; ++i) y = mod_pos(y * y + c, n);
            Nat k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min<unsigned long>(
                    128, mpz_get_ui(Nat(r - k).get_mpz_t()));
                for (unsigned long i = 0; i < lim; ++i) {
                    y = mod_pos(y * y + c, n);
                    q = mod_pos(q * (x > y ? x - y : y - x), n);
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
                steps += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = mod_pos(ys * ys + c, n);
                Nat d = x > ys ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
        if (c > 64) return 0; // give up; caller records the cofactor
    }
}

void factor_into(Nat n, std::vector<std::pair<Nat, unsigned>>& out, Nat& cof) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    Nat g = pollard_rho_brent(n);
    if (g == 0) {
        cof *= n;
        return;
    }
    factor_into(g, out, cof);
    factor_into(n / g, out, cof);
}

} // namespace

Factorization factor(const Nat& n, const Nat& trial_bound) {
    if (n < 1) throw precondition_error("factor: n must be >= 1");
    Factorization f;
    Nat m = n;
    auto strip = [&](const Nat& d) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            m /= d;
            ++e;
        }
        if (e) f.factors.emplace_back(d, e);
    };
    if (trial_bound >= 2) strip(2);
    for (Nat d = 3; d <= trial_bound && d * d <= m; d += 2) strip(d);
    if (m > 1) {
        if (is_prime(m)) {
            // A prime remainder above the bound is a legal cofactor; only a
            // prime the trial loop skipped past (sqrt cutoff) goes in.
            if (m <= trial_bound)
                f.factors.emplace_back(m, 1);
            else
                f.cofactor = m;
        } else {
            std::vector<std::pair<Nat, unsigned>> extra;
            Nat cof = 1;
            factor_into(m, extra, cof);
            f.cofactor = cof;
            std::sort(extra.begin(), extra.end());
            for (auto& [p, e] : extra) {
                if (!f.factors.empty() && f.factors.back().first == p)
                    f.factors.back().second += e;
                else
                    f.factors.emplace_back(p, e);
            }
        }
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

Factorization factor_complete(const Nat& n) {
    Factorization f = factor(n, 100000);
    if (f.cofactor > 1 && is_prime(f.cofactor)) {
        f.factors.emplace_back(f.cofactor, 1);
        f.cofactor = 1;
        std::sort(f.factors.begin(), f.factors.end());
    }
    return f;
}

std::pair<Nat, Int> squarefree_decompose(const Int& n) {
    if (n >= 0) throw not_discriminant();
    unsigned long r4 = mpz_fdiv_ui(n.get_mpz_t(), 4);
    if (r4 == 2 || r4 == 3) throw not_discriminant();

    Factorization f = factor_complete(-n);
    if (!f.complete())
        throw too_large("squarefree_decompose: could not fully factor input");
    Nat u = 1, k = 1;
    for (const auto& [p, e] : f.factors) {
        Nat pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e / 2);
        u *= pe;
        if (e % 2) k *= p;
    }
    // -n = u^2 k with k squarefree
    if (mod_pos(-k, 4) == 1) return {u, -k};
    // otherwise D = -4k; the mod-4 precondition forces u even here
    return {u / 2, -4 * k};
}

Nat least_nonresidue(const Nat& p) {
    for (Nat d = 2;; ++d)
        if (mpz_jacobi(d.get_mpz_t(), p.get_mpz_t()) == -1) return d;
}

Nat powmod(const Nat& base, const Nat& exp, const Nat& mod) {
    Nat r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Nat invmod(const Nat& a, const Nat& mod) {
    Nat r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()))
        throw not_coprime();
    return r;
}

} // namespace curvesmith::modmath
