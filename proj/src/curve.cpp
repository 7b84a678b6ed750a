// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "curvesmith/curve.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "curvesmith/rng.hpp"
#include "curvesmith/word_arith.hpp"

namespace curvesmith::curve {

using modmath::invmod;
using modmath::mod_pos;

CurveEq::CurveEq(Nat p_, Int a_, Int b_) : p(std::move(p_)) {
    if (p < 5 || mpz_even_p(p.get_mpz_t()))
        throw precondition_error("curve modulus must be an odd prime > 3");
    a = mod_pos(a_, p);
    b = mod_pos(b_, p);
    Nat disc = mod_pos(4 * a * a * a + 27 * b * b, p);
    if (disc == 0) throw precondition_error("singular curve: 4a^3 + 27b^2 = 0");
}

bool on_curve(const CurveEq& E, const Point& P) {
    if (P.infinity) return true;
    return mod_pos(P.y * P.y - (P.x * P.x * P.x + E.a * P.x + E.b), E.p) == 0;
}

Point negate(const CurveEq& E, const Point& P) {
    if (P.infinity) return P;
    return Point::affine(P.x, P.y == 0 ? Nat(0) : Nat(E.p - P.y));
}

namespace {

Point add_unchecked(const CurveEq& E, const Point& P, const Point& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const Nat& p = E.p;
    Nat lambda;
    if (P.x == Q.x) {
        if (mod_pos(P.y + Q.y, p) == 0) return Point::at_infinity();
        lambda = mod_pos((3 * P.x * P.x + E.a) * invmod(2 * P.y, p), p);
    } else {
        Nat dx = mod_pos(Int(Q.x) - Int(P.x), p);
        lambda = mod_pos((Int(Q.y) - Int(P.y)) * invmod(dx, p), p);
    }
    Nat x3 = mod_pos(lambda * lambda - P.x - Q.x, p);
    Nat y3 = mod_pos(lambda * (Int(P.x) - Int(x3)) - P.y, p);
    return Point::affine(std::move(x3), std::move(y3));
}

} // namespace

Point add(const CurveEq& E, const Point& P, const Point& Q) {
    if (!on_curve(E, P) || !on_curve(E, Q)) throw curve_mismatch();
    return add_unchecked(E, P, Q);
}

Point scalar_mul(const CurveEq& E, const Nat& k, const Point& P) {
    Point acc = Point::at_infinity();
    if (k == 0 || P.infinity) return acc;
    long bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (long i = bits - 1; i >= 0; --i) {
        acc = add_unchecked(E, acc, acc);
        if (mpz_tstbit(k.get_mpz_t(), i)) acc = add_unchecked(E, acc, P);
    }
    return acc;
}

Nat j_invariant(const CurveEq& E) {
    Nat a3 = mod_pos(4 * E.a * E.a * E.a, E.p);
    Nat denom = mod_pos(a3 + 27 * E.b * E.b, E.p);
    return mod_pos(1728 * a3 * invmod(denom, E.p), E.p);
}

CurveEq curve_from_j(const Nat& p, const Nat& jin) {
    Nat j = mod_pos(jin, p);
    if (j == 0) return CurveEq(p, 0, 1);
    if (j == mod_pos(1728, p)) return CurveEq(p, 1, 0);
    Nat k = mod_pos(1728 - Int(j), p);
    try {
        CurveEq E(p, 3 * j * k, 2 * j * k * k);
        if (j_invariant(E) == j) return E;
    } catch (const precondition_error&) {
        // fall through to the scan
    }
    // Unreachable for p > 3 in exact arithmetic; kept as a safety net.
    for (Nat b = 1; b < p; ++b)
        for (Nat a = 0; a < p; ++a) {
            if (mod_pos(4 * a * a * a + 27 * b * b, p) == 0) continue;
            CurveEq E(p, a, b);
            if (j_invariant(E) == j) return E;
        }
    throw precondition_error("no curve with requested j-invariant");
}

namespace {

/* smallest g that is a non-square, and also a non-cube when p = 1 mod 3 */
Nat sextic_generator(const Nat& p) {
    bool cubes_matter = mpz_fdiv_ui(p.get_mpz_t(), 3) == 1;
    Nat third = (p - 1) / 3;
    for (Nat g = 2;; ++g) {
        if (mpz_jacobi(g.get_mpz_t(), p.get_mpz_t()) != -1) continue;
        if (cubes_matter && modmath::powmod(g, third, p) == 1) continue;
        return g;
    }
}

} // namespace

std::vector<CurveEq> twist_orbit(const CurveEq& E, const std::optional<Nat>& d) {
    const Nat& p = E.p;
    if (d && mpz_jacobi(d->get_mpz_t(), p.get_mpz_t()) != -1) throw not_nonresidue();
    Nat j = j_invariant(E);
    std::vector<CurveEq> orbit;
    if (j == 0) {
        // sextic family E_{0, b g^n}; g must dodge squares and cubes, so a
        // caller-supplied non-residue is not enough here
        Nat g = sextic_generator(p);
        Nat bg = E.b;
        for (int n = 0; n < 6; ++n) {
            orbit.emplace_back(p, 0, bg);
            bg = bg * g % p;
        }
    } else if (j == mod_pos(1728, p)) {
        // quartic family E_{a g^n, 0}
        Nat g = d ? *d : modmath::least_nonresidue(p);
        Nat ag = E.a;
        for (int n = 0; n < 4; ++n) {
            orbit.emplace_back(p, ag, 0);
            ag = ag * g % p;
        }
    } else {
        Nat g = d ? *d : modmath::least_nonresidue(p);
        orbit.push_back(E);
        orbit.emplace_back(p, E.a * g * g, E.b * g * g * g);
    }
    return orbit;
}

CurveEq quadratic_twist(const CurveEq& E) {
    Nat g = modmath::least_nonresidue(E.p);
    return CurveEq(E.p, E.a * g * g, E.b * g * g * g);
}

namespace {

CurveOrder order_from_n(const CurveEq& E, const Nat& N) {
    return CurveOrder{N, Int(E.p) + 1 - N};
}

Nat count_exhaustive(const CurveEq& E) {
    const Nat& p = E.p;
    if (mpz_sizeinbase(p.get_mpz_t(), 2) <= 62) {
        using namespace word;
        u64 pw = mpz_get_ui(p.get_mpz_t());
        u64 aw = mpz_get_ui(E.a.get_mpz_t());
        u64 bw = mpz_get_ui(E.b.get_mpz_t());
        long long acc = 1 + static_cast<long long>(pw);
        for (u64 x = 0; x < pw; ++x) {
            u64 rhs = addmod(addmod(mulmod(mulmod(x, x, pw), x, pw),
                                    mulmod(aw, x, pw), pw),
                             bw, pw);
            acc += jacobi(rhs, pw);
        }
        return Nat(static_cast<unsigned long>(acc));
    }
    Nat acc = p + 1;
    for (Nat x = 0; x < p; ++x) {
        Nat rhs = mod_pos(x * x * x + E.a * x + E.b, p);
        acc += mpz_jacobi(rhs.get_mpz_t(), p.get_mpz_t());
    }
    return acc;
}

struct BabyEntry {
    Nat j, x, y; // jP = (x, y)
};

/* All n in [lo, hi] with nP = infinity, by baby-step giant-step: write
 * n = (lo + i m) + j and match (lo + i m) P against -jP. */
std::vector<Nat> annihilators_in(const CurveEq& E, const Point& P,
                                 const Nat& lo, const Nat& hi) {
    if (P.infinity) throw precondition_error("annihilators of the zero point");
    Nat W = hi - lo + 1;
    Nat m = modmath::isqrt(W) + 1;

    std::unordered_map<unsigned long, std::vector<BabyEntry>> table;
    Point B = Point::at_infinity();
    for (Nat j = 0; j < m; ++j) {
        if (!B.infinity)
            table[mpz_get_ui(B.x.get_mpz_t())].push_back(BabyEntry{j, B.x, B.y});
        B = add_unchecked(E, B, P);
    }
    const Point mP = B;

    std::vector<Nat> hits;
    Point R = scalar_mul(E, lo, P);
    for (Nat base = lo; base <= hi; base += m) {
        if (R.infinity) {
            hits.push_back(base);
        } else {
            auto it = table.find(mpz_get_ui(R.x.get_mpz_t()));
            if (it != table.end())
                for (const BabyEntry& e : it->second) {
                    if (e.j == 0 || e.x != R.x) continue;
                    if (mod_pos(R.y + e.y, E.p) == 0) {
                        Nat n = base + e.j;
                        if (n <= hi) hits.push_back(n);
                    }
                }
        }
        R = add_unchecked(E, R, mP);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

/* exact order of P given one annihilating multiple */
Nat exact_order(const CurveEq& E, const Point& P, const Nat& multiple) {
    Nat d = multiple;
    auto fac = modmath::factor_complete(multiple);
    if (!fac.complete())
        throw too_large("cannot factor candidate point order");
    for (const auto& [q, e] : fac.factors)
        for (unsigned k = 0; k < e; ++k) {
            Nat dq = d / q;
            if (scalar_mul(E, dq, P).infinity)
                d = dq;
            else
                break;
        }
    return d;
}

Point sample_point(const CurveEq& E, Rng& rng) {
    const Nat& p = E.p;
    while (true) {
        Nat x = rng.below(p);
        Nat rhs = mod_pos(x * x * x + E.a * x + E.b, p);
        int chi = mpz_jacobi(rhs.get_mpz_t(), p.get_mpz_t());
        if (chi == -1) continue;
        if (chi == 0) return Point::affine(std::move(x), 0);
        return Point::affine(std::move(x), modmath::sqrt_mod_prime(rhs, p));
    }
}

/* Mestre-style order determination from E and its quadratic twist: grow the
 * lcm of sampled point orders on both until exactly one N in the Hasse
 * window is compatible. */
Nat count_bsgs(const CurveEq& E, std::uint64_t seed) {
    const Nat& p = E.p;
    Nat ts = modmath::isqrt(4 * p);
    Nat lo = p + 1 - ts, hi = p + 1 + ts;
    CurveEq T = quadratic_twist(E);
    Rng rng(seed);
    Nat lcmE = 1, lcmT = 1;
    for (int round = 0; round < 256; ++round) {
        bool on_twist = round % 2 == 1;
        const CurveEq& C = on_twist ? T : E;
        Nat& L = on_twist ? lcmT : lcmE;
        Point P = sample_point(C, rng);
        auto ns = annihilators_in(C, P, lo, hi);
        if (ns.empty())
            throw too_large("point order search failed; is p prime?");
        Nat ord = exact_order(C, P, ns.front());
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), ord.get_mpz_t());

        // candidates N for E: multiples of lcmE in the window whose twin
        // order 2p + 2 - N is a multiple of lcmT
        Nat first = ((lo + lcmE - 1) / lcmE) * lcmE;
        std::vector<Nat> cands;
        for (Nat n = first; n <= hi; n += lcmE)
            if (mpz_divisible_p(Nat(2 * p + 2 - n).get_mpz_t(), lcmT.get_mpz_t()))
                cands.push_back(n);
        if (cands.size() == 1) return cands.front();
        if (cands.empty())
            throw too_large("no order candidate survives; is p prime?");
    }
    throw too_large("order not determined after 256 rounds");
}

} // namespace

CurveOrder count_points(const CurveEq& E, CountMode mode, std::uint64_t seed) {
    const Nat kExhaustiveMax(1000000);
    bool small = E.p <= kExhaustiveMax;
    if (mode == CountMode::automatic) mode = small ? CountMode::exhaustive : CountMode::bsgs;
    if (mode == CountMode::bsgs && E.p <= 229) mode = CountMode::exhaustive;
    if (mode == CountMode::exhaustive) {
        if (mpz_sizeinbase(E.p.get_mpz_t(), 2) > 34)
            throw too_large("exhaustive count above 2^34 is not sensible");
        return order_from_n(E, count_exhaustive(E));
    }
    return order_from_n(E, count_bsgs(E, seed));
}

namespace {

/* exponent of q in n */
unsigned valuation(const Nat& n, const Nat& q) {
    Nat m = n;
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) {
        m /= q;
        ++v;
    }
    return v;
}

GroupStructure structure_exhaustive(const CurveEq& E, const Nat& N) {
    const Nat& p = E.p;
    Nat exponent = 1;
    for (Nat x = 0; x < p; ++x) {
        Nat rhs = mod_pos(x * x * x + E.a * x + E.b, p);
        int chi = mpz_jacobi(rhs.get_mpz_t(), p.get_mpz_t());
        if (chi == -1) continue;
        Point P = Point::affine(x, chi == 0 ? Nat(0) : modmath::sqrt_mod_prime(rhs, p));
        Nat ord = exact_order(E, P, N);
        mpz_lcm(exponent.get_mpz_t(), exponent.get_mpz_t(), ord.get_mpz_t());
        if (exponent == N) break; // cyclic, no need to keep looking
    }
    return GroupStructure{N / exponent, exponent};
}

GroupStructure structure_sampled(const CurveEq& E, const Nat& N, Rng& rng) {
    auto fac = modmath::factor_complete(N);
    if (!fac.complete()) throw too_large("group order does not factor at desk scale");
    const Nat& p = E.p;
    Nat n1 = 1;
    for (const auto& [ell, v] : fac.factors) {
        unsigned vp = valuation(p - 1, ell);
        unsigned amax = std::min(vp, v / 2);
        if (amax == 0) continue;
        // beta = largest order exponent of the ell-Sylow part of a sample
        Nat cof = N;
        for (unsigned k = 0; k < v; ++k) cof /= ell;
        unsigned beta = 0;
        for (int round = 0; round < 64 && beta < v; ++round) {
            Point Q = scalar_mul(E, cof, sample_point(E, rng));
            unsigned k = 0;
            while (!Q.infinity) {
                Q = scalar_mul(E, ell, Q);
                ++k;
            }
            beta = std::max(beta, k);
        }
        unsigned alpha = std::min(v - beta, amax);
        for (unsigned k = 0; k < alpha; ++k) n1 *= ell;
    }
    return GroupStructure{n1, N / n1};
}

} // namespace

GroupStructure group_structure(const CurveEq& E, std::uint64_t seed,
                               const Nat& exhaustive_bound) {
    CurveOrder ord = count_points(E, CountMode::automatic, seed);
    GroupStructure gs = [&] {
        if (E.p <= exhaustive_bound) return structure_exhaustive(E, ord.N);
        Rng rng(seed);
        return structure_sampled(E, ord.N, rng);
    }();
    if (!mpz_divisible_p(gs.n2.get_mpz_t(), gs.n1.get_mpz_t()) ||
        !mpz_divisible_p(Nat(E.p - 1).get_mpz_t(), gs.n1.get_mpz_t()))
        throw too_large("group structure sampling produced an inconsistent shape");
    return gs;
}

DivisionPoly division_polynomial(const CurveEq& E, unsigned long m) {
    if (m < 1) throw precondition_error("division polynomial index must be >= 1");
    using polyfp::PolyFp;
    const Nat& p = E.p;
    const Int a = E.a, b = E.b;

    std::vector<PolyFp> f(std::max<unsigned long>(m + 3, 6), polyfp::zero(p));
    f[0] = polyfp::zero(p);
    f[1] = polyfp::constant(p, 1);
    f[2] = polyfp::constant(p, 2);
    f[3] = polyfp::from_coeffs(p, {-(a * a), 12 * b, 6 * a, 0, 3});
    f[4] = polyfp::from_coeffs(
        p, {-4 * (a * a * a + 8 * b * b), -16 * a * b, -20 * a * a, 80 * b, 20 * a, 0, 4});
    PolyFp A = polyfp::from_coeffs(p, {b, a, 0, 1}); // y^2 = A(x)
    PolyFp A2 = polyfp::mul(A, A);
    Nat inv2 = modmath::invmod(2, p);

    for (unsigned long i = 5; i <= m; ++i) {
        unsigned long k = i / 2;
        if (i % 2 == 1) {
            PolyFp t1 = polyfp::mul(f[k + 2], polyfp::mul(f[k], polyfp::mul(f[k], f[k])));
            PolyFp t2 = polyfp::mul(f[k - 1], polyfp::mul(f[k + 1], polyfp::mul(f[k + 1], f[k + 1])));
            f[i] = k % 2 == 0 ? polyfp::sub(polyfp::mul(A2, t1), t2)
                              : polyfp::sub(t1, polyfp::mul(A2, t2));
        } else {
            PolyFp t1 = polyfp::mul(f[k + 2], polyfp::mul(f[k - 1], f[k - 1]));
            PolyFp t2 = polyfp::mul(f[k - 2], polyfp::mul(f[k + 1], f[k + 1]));
            f[i] = polyfp::scale(polyfp::mul(f[k], polyfp::sub(t1, t2)), inv2);
        }
    }
    return DivisionPoly{f[m], m % 2 == 0};
}

RationalMap mul_by_m_x_map(const CurveEq& E, unsigned long m) {
    if (m < 2) throw precondition_error("multiplication map needs m >= 2");
    using polyfp::PolyFp;
    const Nat& p = E.p;
    PolyFp A = polyfp::from_coeffs(p, {E.b, E.a, 0, 1});
    PolyFp fm = division_polynomial(E, m).xpart;
    PolyFp fm1 = division_polynomial(E, m - 1).xpart;
    PolyFp fp1 = division_polynomial(E, m + 1).xpart;
    PolyFp den, cross;
    if (m % 2 == 1) {
        den = polyfp::mul(fm, fm);
        cross = polyfp::mul(A, polyfp::mul(fm1, fp1));
    } else {
        den = polyfp::mul(A, polyfp::mul(fm, fm));
        cross = polyfp::mul(fm1, fp1);
    }
    PolyFp num = polyfp::sub(polyfp::mul(polyfp::x_poly(p), den), cross);
    PolyFp g = polyfp::gcd_poly(num, den);
    if (g.degree() > 0) {
        num = polyfp::divrem(num, g).first;
        den = polyfp::divrem(den, g).first;
    }
    return RationalMap{num, den};
}

} // namespace curvesmith::curve
