#pragma once

#include <vector>

#include "mset/point_patch.hpp"
#include "mset/zsqrt2.hpp"

namespace mset {

// Element of the real Heisenberg group in unitriangular coordinates
// ((1,x,z),(0,1,y),(0,0,1)).
struct HeisElement {
    double x = 0, y = 0, z = 0;
};

inline HeisElement heis_compose(const HeisElement& g, const HeisElement& h) {
    return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}
inline HeisElement heis_inverse(const HeisElement& g) {
    return {-g.x, -g.y, -g.z + g.x * g.y};
}

// Exact element of H(Z[sqrt2]).
struct HeisExact {
    ZSqrt2 x, y, z;

    HeisElement value() const { return {x.value(), y.value(), z.value()}; }
    HeisElement star_value() const { return {x.conj_value(), y.conj_value(), z.conj_value()}; }
};

inline HeisExact heis_compose(const HeisExact& g, const HeisExact& h) {
    return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}
inline HeisExact heis_inverse(const HeisExact& g) {
    return {-g.x, -g.y, -g.z + g.x * g.y};
}

// Entrywise Galois conjugation a + b*sqrt2 -> a - b*sqrt2; a group
// homomorphism of H(Z[sqrt2]).
inline HeisExact heis_star(const HeisExact& g) {
    return {g.x.conj(), g.y.conj(), g.z.conj()};
}

// Box window on the conjugate side, given by per-axis half-widths.
struct HeisWindow {
    double s1 = 0.8, s2 = 0.8, s3 = 0.8;
};

// Enumerate all g in H(Z[sqrt2]) with g in the box F_T = {|x| <= T,
// |y| <= T, |z| <= T^2} and star(g) in the window box.  The coordinate
// constraints are independent, so the set is the product of three
// one-dimensional model sets; the patch is complete over F_T.
PointPatch heis_enumerate(const HeisWindow& window, double T, long long budget = 50'000'000);

// |P0 ∩ F_t| for each t in the grid, computed from the sorted
// one-dimensional component sets without materializing the product.
std::vector<long long> heis_counts(const HeisWindow& window, const std::vector<double>& t_grid,
                                   long long budget = 50'000'000);

// Haar volume of F_t (Haar = Lebesgue dx dy dz).
inline double heis_box_volume(double t) { return 8.0 * t * t * t * t; }

// Window volume over lattice covolume for the product embedding:
// (2 s1)(2 s2)(2 s3) / (2 sqrt2)^3.
double heis_predicted_density(const HeisWindow& window);

} // namespace mset
