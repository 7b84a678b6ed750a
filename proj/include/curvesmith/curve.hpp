// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef CURVESMITH_CURVE_HPP
#define CURVESMITH_CURVE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "curvesmith/modmath.hpp"
#include "curvesmith/polyfp.hpp"

namespace curvesmith::curve {

using modmath::Int;
using modmath::Nat;

/* y^2 = x^3 + ax + b over F_p.  The constructor validates nonsingularity and
 * p > 3 odd; primality of p is the caller's contract. */
struct CurveEq {
    Nat p, a, b;

    CurveEq(Nat p_, Int a_, Int b_);

    bool operator==(const CurveEq& o) const {
        return p == o.p && a == o.a && b == o.b;
    }
};

struct Point {
    bool infinity = true;
    Nat x, y;

    static Point at_infinity() { return Point{}; }
    static Point affine(Nat x_, Nat y_) { return Point{false, std::move(x_), std::move(y_)}; }

    bool operator==(const Point& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

struct CurveOrder {
    Nat N;
    Int t; // N = p + 1 - t, |t| <= 2 sqrt(p)
};

/* E(F_p) = Z/n1 x Z/n2 with n1 | n2 and n1 | p-1 */
struct GroupStructure {
    Nat n1, n2;
};

enum class CountMode { automatic, exhaustive, bsgs };

bool on_curve(const CurveEq& E, const Point& P);
Point negate(const CurveEq& E, const Point& P);
/* chord-tangent sum; throws curve_mismatch if either point fails the curve
 * equation */
Point add(const CurveEq& E, const Point& P, const Point& Q);
Point scalar_mul(const CurveEq& E, const Nat& k, const Point& P);

Nat j_invariant(const CurveEq& E);

/* Some curve with the requested j-invariant: (0,1) for j=0, (1,0) for
 * j=1728, else a = 3j(1728-j), b = 2j(1728-j)^2; the result is validated by
 * recomputing j and falls back to a small search if the closed form ever
 * degenerates. */
CurveEq curve_from_j(const Nat& p, const Nat& j);

/* Representatives of every F_p-isomorphism class sharing j(E): the quadratic
 * twist pair for generic j, quartic family for j = 1728, sextic for j = 0.
 * Entries may repeat (how many are distinct depends on p mod 12). */
std::vector<CurveEq> twist_orbit(const CurveEq& E,
                                 const std::optional<Nat>& d = std::nullopt);

/* d^2 a, d^3 b for the least non-residue d: trace negates */
CurveEq quadratic_twist(const CurveEq& E);

/* Exact order.  automatic = exhaustive x-sweep for p <= 1e6, else
 * baby-step/giant-step order finding on E and its twist (valid for p > 229;
 * the seed keys the point sampling). */
CurveOrder count_points(const CurveEq& E, CountMode mode = CountMode::automatic,
                        std::uint64_t seed = 1);

/* Abelian group shape.  Exhaustive tabulation for p <= exhaustive_bound;
 * beyond that the per-prime rank is sampled (64 rounds per prime, miss
 * probability < 2^-64) from a factored order. */
GroupStructure group_structure(const CurveEq& E, std::uint64_t seed = 1,
                               const Nat& exhaustive_bound = 2000);

/* psi_m: xpart in F_p[x]; when y_factor is set the polynomial is y * xpart */
struct DivisionPoly {
    polyfp::PolyFp xpart;
    bool y_factor = false;
};

DivisionPoly division_polynomial(const CurveEq& E, unsigned long m);

/* x-coordinate map of multiplication by m, as a reduced fraction:
 * num/den with num monic-degree m^2 and f(x(P)) = x(mP) wherever mP != O */
struct RationalMap {
    polyfp::PolyFp num, den;
};

RationalMap mul_by_m_x_map(const CurveEq& E, unsigned long m);

} // namespace curvesmith::curve

#endif
