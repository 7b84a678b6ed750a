// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "curvesmith/polyfp.hpp"

#include <algorithm>
#include <cassert>

#include "curvesmith/rng.hpp"

namespace curvesmith::polyfp {

namespace {

void trim(std::vector<Nat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

/* plain coefficient product over Z: schoolbook below degree 32 as the
 * Karatsuba base case */
std::vector<Int> mul_z(const std::vector<Nat>& a, const std::vector<Nat>& b);

std::vector<Int> school_z(const std::vector<Nat>& a, const std::vector<Nat>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Int> karatsuba_z(const std::vector<Nat>& a, const std::vector<Nat>& b) {
    std::size_t half = std::max(a.size(), b.size()) / 2;
    auto lo = [&](const std::vector<Nat>& v) {
        return std::vector<Nat>(v.begin(), v.begin() + std::min(half, v.size()));
    };
    auto hi = [&](const std::vector<Nat>& v) {
        return v.size() > half ? std::vector<Nat>(v.begin() + half, v.end())
                               : std::vector<Nat>{};
    };
    auto plus = [](std::vector<Nat> x, const std::vector<Nat>& y) {
        if (y.size() > x.size()) x.resize(y.size(), 0);
        for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
        return x;
    };
    std::vector<Nat> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    std::vector<Int> z0 = a0.empty() || b0.empty() ? std::vector<Int>{} : mul_z(a0, b0);
    std::vector<Int> z2 = a1.empty() || b1.empty() ? std::vector<Int>{} : mul_z(a1, b1);
    std::vector<Nat> sa = plus(a0, a1), sb = plus(b0, b1);
    std::vector<Int> z1 = sa.empty() || sb.empty() ? std::vector<Int>{} : mul_z(sa, sb);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i)
        if (i + half < out.size()) out[i + half] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * half] += z2[i];
    return out;
}

std::vector<Int> mul_z(const std::vector<Nat>& a, const std::vector<Nat>& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) < 32) return school_z(a, b);
    return karatsuba_z(a, b);
}

} // namespace

PolyFp::PolyFp(Nat modulus, std::vector<Nat> coeffs)
    : p(std::move(modulus)), c(std::move(coeffs)) {
    for (auto& v : c) v = modmath::mod_pos(v, p);
    trim(c);
}

PolyFp zero(const Nat& p) { return PolyFp(p, {}); }

PolyFp constant(const Nat& p, const Int& v) { return PolyFp(p, {modmath::mod_pos(v, p)}); }

PolyFp from_coeffs(const Nat& p, const std::vector<Int>& raw) {
    std::vector<Nat> c;
    c.reserve(raw.size());
    for (const auto& v : raw) c.push_back(modmath::mod_pos(v, p));
    return PolyFp(p, std::move(c));
}

PolyFp x_poly(const Nat& p) { return PolyFp(p, {0, 1}); }

PolyFp add(const PolyFp& f, const PolyFp& g) {
    std::vector<Nat> c(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) c[i] += f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) c[i] += g.c[i];
    return PolyFp(f.p, std::move(c));
}

PolyFp sub(const PolyFp& f, const PolyFp& g) {
    std::vector<Nat> c(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) c[i] += f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) c[i] -= g.c[i];
    return PolyFp(f.p, std::move(c));
}

PolyFp mul(const PolyFp& f, const PolyFp& g) {
    if (f.is_zero() || g.is_zero()) return zero(f.p);
    std::vector<Int> prod = mul_z(f.c, g.c);
    std::vector<Nat> c;
    c.reserve(prod.size());
    for (auto& v : prod) c.push_back(modmath::mod_pos(v, f.p));
    return PolyFp(f.p, std::move(c));
}

PolyFp scale(const PolyFp& f, const Int& k) {
    std::vector<Nat> c = f.c;
    Nat kk = modmath::mod_pos(k, f.p);
    for (auto& v : c) v = v * kk % f.p;
    return PolyFp(f.p, std::move(c));
}

PolyFp monic(const PolyFp& f) {
    if (f.is_zero() || f.c.back() == 1) return f;
    return scale(f, modmath::invmod(f.c.back(), f.p));
}

std::pair<PolyFp, PolyFp> divrem(const PolyFp& f, const PolyFp& g) {
    if (g.is_zero()) throw precondition_error("polynomial division by zero");
    if (f.degree() < g.degree()) return {zero(f.p), f};
    const Nat& p = f.p;
    Nat lead_inv = modmath::invmod(g.c.back(), p);
    std::vector<Nat> rem = f.c;
    std::vector<Nat> quot(f.c.size() - g.c.size() + 1, 0);
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(g.c.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        Nat q = rem[i] * lead_inv % p;
        quot[i - g.degree()] = q;
        for (std::size_t j = 0; j < g.c.size(); ++j) {
            std::size_t k = i - g.degree() + j;
            rem[k] = modmath::mod_pos(rem[k] - q * g.c[j], p);
        }
    }
    rem.resize(g.c.size() - 1);
    return {PolyFp(p, std::move(quot)), PolyFp(p, std::move(rem))};
}

Nat eval(const PolyFp& f, const Nat& x) {
    Nat acc = 0;
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it)
        acc = (acc * x + *it) % f.p;
    return acc;
}

PolyFp gcd_poly(const PolyFp& f, const PolyFp& g) {
    PolyFp a = f, b = g;
    while (!b.is_zero()) {
        PolyFp r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

namespace {

PolyFp mul_mod_xk(const PolyFp& a, const PolyFp& b, std::size_t k) {
    PolyFp prod = mul(a, b);
    if (prod.c.size() > k) prod.c.resize(k);
    trim(prod.c);
    return prod;
}

/* power-series inverse of f (f(0) invertible) to precision k, by Newton */
PolyFp series_inverse(const PolyFp& f, std::size_t k) {
    PolyFp g = constant(f.p, modmath::invmod(f.c[0], f.p));
    std::size_t prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        PolyFp fg = mul_mod_xk(f, g, prec);
        PolyFp two_minus = sub(constant(f.p, 2), fg);
        g = mul_mod_xk(g, two_minus, prec);
    }
    return g;
}

PolyFp reverse(const PolyFp& f, std::size_t len) {
    std::vector<Nat> c(len, 0);
    for (std::size_t i = 0; i < f.c.size() && i < len; ++i)
        c[len - 1 - i] = f.c[i];
    return PolyFp(f.p, std::move(c));
}

} // namespace

ModCtx::ModCtx(PolyFp modulus) : f_(monic(std::move(modulus))) {
    if (f_.degree() < 1)
        throw precondition_error("reduction modulus must have degree >= 1");
    std::size_t n = f_.degree();
    rinv_ = series_inverse(reverse(f_, n + 1), n > 1 ? n : 1);
}

PolyFp ModCtx::reduce(const PolyFp& g) const {
    long n = f_.degree();
    if (g.degree() < n) return g;
    if (g.degree() >= 2 * n) {
        // fall back to long division for oversize inputs
        return divrem(g, f_).second;
    }
    std::size_t qlen = g.degree() - n + 1;
    PolyFp grev = reverse(g, g.degree() + 1);
    PolyFp qrev = mul_mod_xk(grev, rinv_, qlen);
    PolyFp q = reverse(qrev, qlen);
    PolyFp r = sub(g, mul(q, f_));
    // r has degree < n by construction
    if (r.degree() >= n) r = divrem(r, f_).second;
    return r;
}

PolyFp ModCtx::mulmod(const PolyFp& a, const PolyFp& b) const {
    return reduce(mul(a, b));
}

PolyFp ModCtx::powmod(const PolyFp& base, const Nat& e) const {
    if (e == 0) return constant(f_.p, 1);
    PolyFp b = reduce(base);
    PolyFp acc = constant(f_.p, 1);
    long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (long i = bits - 1; i >= 0; --i) {
        acc = mulmod(acc, acc);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(acc, b);
    }
    return acc;
}

PolyFp reduce_mod_p(const std::vector<Int>& coeffs, const Nat& p) {
    return from_coeffs(p, coeffs);
}

namespace {

/* Equal-degree-style descent: every irreducible factor is linear, so any
 * gcd with (X+delta)^((p-1)/2) - 1 splits off the roots r with
 * chi(r+delta) = 1. */
void split_all(const PolyFp& f, Rng& rng, std::vector<Nat>& out) {
    if (f.degree() <= 0) return;
    const Nat& p = f.p;
    if (f.degree() == 1) {
        out.push_back(modmath::mod_pos(-Int(f.c[0]), p));
        return;
    }
    Nat half = (p - 1) / 2;
    ModCtx ctx(f);
    for (int attempt = 0;; ++attempt) {
        // seed-keyed deltas first; after many misses walk delta = 0, 1, 2, ...
        Nat delta = attempt < 24 ? rng.below(p) : Nat(attempt - 24);
        PolyFp base(p, {delta, 1});
        PolyFp pw = ctx.powmod(base, half);
        PolyFp g = gcd_poly(sub(pw, constant(p, 1)), f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split_all(g, rng, out);
            split_all(divrem(f, g).first, rng, out);
            return;
        }
    }
}

PolyFp split_check(const PolyFp& fin) {
    PolyFp f = monic(fin);
    if (f.is_zero()) throw precondition_error("roots of the zero polynomial");
    if (f.degree() >= 1) {
        ModCtx ctx(f);
        PolyFp xp = ctx.powmod(x_poly(f.p), f.p);
        if (!(xp == ctx.reduce(x_poly(f.p)))) throw not_split();
    }
    return f;
}

} // namespace

std::vector<Nat> roots_of_split(const PolyFp& fin, std::uint64_t seed) {
    PolyFp f = split_check(fin);
    std::vector<Nat> roots;
    if (f.degree() >= 1) {
        Rng rng(seed);
        split_all(f, rng, roots);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Nat one_root_of_split(const PolyFp& fin, std::uint64_t seed) {
    PolyFp f = split_check(fin);
    if (f.degree() < 1) throw precondition_error("constant polynomial has no roots");
    Rng rng(seed);
    while (f.degree() > 1) {
        const Nat& p = f.p;
        Nat half = (p - 1) / 2;
        ModCtx ctx(f);
        for (int attempt = 0;; ++attempt) {
            Nat delta = attempt < 24 ? rng.below(p) : Nat(attempt - 24);
            PolyFp base(p, {delta, 1});
            PolyFp pw = ctx.powmod(base, half);
            PolyFp g = gcd_poly(sub(pw, constant(p, 1)), f);
            if (g.degree() > 0 && g.degree() < f.degree()) {
                PolyFp other = divrem(f, g).first;
                f = g.degree() <= other.degree() ? std::move(g) : std::move(other);
                break;
            }
        }
    }
    return modmath::mod_pos(-Int(f.c[0]), f.p);
}

} // namespace curvesmith::polyfp
