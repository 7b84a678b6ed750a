// Copyright (c) 2026 the curvesmith authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef CURVESMITH_ERRORS_HPP
#define CURVESMITH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvesmith {

/* Contract violations: caller handed us inputs outside a precondition. */
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

/* A bounded search ran out of road.  Not a bug: the caller asked for
 * something that may not exist (or set the cap too low). */
struct search_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct non_residue : precondition_error {
    non_residue() : precondition_error("value is a quadratic non-residue") {}
};
struct singular_lift : precondition_error {
    singular_lift() : precondition_error("Hensel lift is singular (v divides x0)") {}
};
struct not_coprime : precondition_error {
    not_coprime() : precondition_error("moduli are not coprime") {}
};
struct not_discriminant : precondition_error {
    not_discriminant() : precondition_error("not an imaginary quadratic discriminant") {}
};
struct curve_mismatch : precondition_error {
    curve_mismatch() : precondition_error("points lie on different curves") {}
};
struct not_nonresidue : precondition_error {
    not_nonresidue() : precondition_error("twisting element is a square") {}
};
struct not_split : precondition_error {
    not_split() : precondition_error("polynomial does not split into distinct linear factors") {}
};
struct not_divisible : precondition_error {
    not_divisible() : precondition_error("m does not divide the curve order") {}
};
struct too_large : precondition_error {
    using precondition_error::precondition_error;
};
struct too_large_m : precondition_error {
    too_large_m() : precondition_error("m exceeds sqrt(p)/4; no trace window fits") {}
};

struct precision_exhausted : std::runtime_error {
    precision_exhausted()
        : std::runtime_error("class polynomial rounding failed after retries") {}
};
struct trials_exhausted : search_exhausted {
    explicit trials_exhausted(unsigned long n)
        : search_exhausted("no hit within " + std::to_string(n) + " trials") {}
};
struct no_trace_in_interval : search_exhausted {
    no_trace_in_interval()
        : search_exhausted("no admissible trace in the Hasse interval") {}
};
struct subgroup_verification_failed : std::runtime_error {
    subgroup_verification_failed()
        : std::runtime_error("constructed curve does not contain the requested subgroup") {}
};

} // namespace curvesmith

#endif
