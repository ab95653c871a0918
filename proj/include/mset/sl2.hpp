#pragma once

#include <vector>

#include "mset/point_patch.hpp"
#include "mset/zsqrt2.hpp"

namespace mset {

// Real 2x2 matrix (a b; c d) with det = 1.
struct SL2Element {
    double a = 1, b = 0, c = 0, d = 1;

    double det() const { return a * d - b * c; }
};

inline SL2Element sl2_compose(const SL2Element& g, const SL2Element& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
            g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}
inline SL2Element sl2_inverse(const SL2Element& g) { return {g.d, -g.b, -g.c, g.a}; }

// cosh of the hyperbolic displacement d(i, g.i) of the base point of the
// upper half-plane: (a^2 + b^2 + c^2 + d^2) / 2 for det = 1.  Verified in
// the tests against a Moebius-action geodesic oracle.
inline double sl2_cosh_displacement(const SL2Element& g) {
    return 0.5 * (g.a * g.a + g.b * g.b + g.c * g.c + g.d * g.d);
}

inline double sl2_frob_dist_to_identity(const SL2Element& g) {
    return std::sqrt(sq(g.a - 1) + sq(g.b) + sq(g.c) + sq(g.d - 1));
}

// Haar volume of F_t = {g : d(i, g.i) <= t}, normalized so the projection
// to the hyperbolic plane carries hyperbolic area and the fiber has unit
// mass: the area of the hyperbolic disc of radius t.
inline double hyp_ball_volume(double t) {
    double s = std::sinh(t / 2.0);
    return 4.0 * M_PI * s * s;
}

// Exact element of SL2(Z[sqrt2]).
struct SL2Exact {
    ZSqrt2 a, b, c, d;

    SL2Element value() const { return {a.value(), b.value(), c.value(), d.value()}; }
    SL2Element star_value() const {
        return {a.conj_value(), b.conj_value(), c.conj_value(), d.conj_value()};
    }
    // Determinant parts: an element of the group has det exactly 1 (both
    // Galois components, since conjugation is a ring homomorphism).
    ZSqrt2 det() const { return a * d - b * c; }
};

inline SL2Exact sl2_compose(const SL2Exact& g, const SL2Exact& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
            g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}
inline SL2Exact sl2_inverse(const SL2Exact& g) { return {g.d, -g.b, -g.c, g.a}; }
inline SL2Exact sl2_star(const SL2Exact& g) {
    return {g.a.conj(), g.b.conj(), g.c.conj(), g.d.conj()};
}

struct SL2EnumResult {
    PointPatch patch;           // kind SL2, exact coordinates attached
    double rho_used = 0;        // window radius after boundary perturbation
    double t = 0;               // displacement bound
    int entry_bound = 0;        // integer coordinate box
    bool boundary_box_hit = false; // some hit touches the integer box boundary
    int implied_entry_bound = 0;   // bound sufficient for completeness at (t, rho)
    long long candidates_scanned = 0;
};

// Enumerate SL2(Z[sqrt2]) model-set points: integer coordinates bounded
// by N, exact determinant one, cosh d(i, g.i) <= cosh t, and conjugate
// matrix within Frobenius distance rho of the identity.  If a hit lands
// within 1e-6 of the window boundary, rho is nudged outward and the
// search repeats (regular windows only).  Completeness is relative to N;
// hits on the integer box boundary are flagged.
SL2EnumResult sl2_enumerate(double rho, double t, int entry_bound,
                            long long budget = 200'000'000);

} // namespace mset
