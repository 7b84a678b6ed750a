// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef CURVESMITH_POLYFP_HPP
#define CURVESMITH_POLYFP_HPP

#include <cstdint>
#include <vector>

#include "curvesmith/modmath.hpp"

namespace curvesmith::polyfp {

using modmath::Int;
using modmath::Nat;

/* Dense univariate polynomial over F_p, coefficients ascending, leading
 * coefficient nonzero (the zero polynomial has an empty vector). */
struct PolyFp {
    Nat p;
    std::vector<Nat> c;

    PolyFp() = default;
    PolyFp(Nat modulus, std::vector<Nat> coeffs);

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Nat& operator[](std::size_t i) const { return c[i]; }

    bool operator==(const PolyFp& o) const { return p == o.p && c == o.c; }
};

PolyFp zero(const Nat& p);
PolyFp constant(const Nat& p, const Int& v);
PolyFp from_coeffs(const Nat& p, const std::vector<Int>& raw);
/* monic X + a0, X^2 + a1 X + a0, ... */
PolyFp x_poly(const Nat& p);

PolyFp add(const PolyFp& f, const PolyFp& g);
PolyFp sub(const PolyFp& f, const PolyFp& g);
PolyFp mul(const PolyFp& f, const PolyFp& g);
PolyFp scale(const PolyFp& f, const Int& k);
PolyFp monic(const PolyFp& f);
std::pair<PolyFp, PolyFp> divrem(const PolyFp& f, const PolyFp& g);
Nat eval(const PolyFp& f, const Nat& x);

/* Monic greatest common divisor; gcd(f, 0) = monic(f). */
PolyFp gcd_poly(const PolyFp& f, const PolyFp& g);

/* Fixed-modulus reduction context with a Newton-inverse of the reversed
 * modulus, so reducing a 2n-degree product costs two multiplications. */
class ModCtx {
  public:
    explicit ModCtx(PolyFp modulus);
    const PolyFp& modulus() const { return f_; }
    PolyFp reduce(const PolyFp& g) const;
    PolyFp mulmod(const PolyFp& a, const PolyFp& b) const;
    PolyFp powmod(const PolyFp& base, const Nat& e) const;

  private:
    PolyFp f_;      // monic
    PolyFp rinv_;   // inverse of reverse(f) mod X^(deg f)
};

/* Coefficientwise reduction of an integer polynomial. */
PolyFp reduce_mod_p(const std::vector<Int>& coeffs, const Nat& p);

/* All roots of a squarefree polynomial that splits completely over F_p,
 * sorted ascending.  Splitting is randomized (seed-keyed delta sequence with
 * a deterministic fallback) but the result does not depend on the seed.
 * Throws not_split if X^p != X (mod f). */
std::vector<Nat> roots_of_split(const PolyFp& f, std::uint64_t seed);

/* One root of a completely-split squarefree polynomial; cheaper than
 * extracting all of them when the degree is large. */
Nat one_root_of_split(const PolyFp& f, std::uint64_t seed);

} // namespace curvesmith::polyfp

#endif
