#pragma once

#include <vector>

#include "mset/geometry.hpp"
#include "mset/zsqrt2.hpp"

namespace mset {

// Which group the coordinates of a patch live in.  Euclidean points are
// plain vectors in R^d; Heisenberg points are the (x, y, z) coordinates of
// a unitriangular 3x3 matrix; SL2 points are the (a, b, c, d) entries of a
// determinant-one 2x2 matrix.
enum class InstanceKind { Euclidean, Heisenberg, SL2 };

int instance_dim(InstanceKind kind);

std::vector<double> group_identity(InstanceKind kind);
std::vector<double> group_compose(InstanceKind kind, const std::vector<double>& x,
                                  const std::vector<double>& y);
std::vector<double> group_inverse(InstanceKind kind, const std::vector<double>& x);
// x^{-1} * y
std::vector<double> group_difference(InstanceKind kind, const std::vector<double>& x,
                                     const std::vector<double>& y);

// Distance of a group element from the identity in the admissible metric
// of the instance: Euclidean norm for R^d, the quasi-norm
// max(|x|, |y|, sqrt(|z|)) for Heisenberg (left-invariant up to constants,
// not a true metric), Frobenius distance to the identity matrix for SL2.
double identity_distance(InstanceKind kind, const std::vector<double>& v);

// Exact variants for coordinates in Z[sqrt2].
std::vector<ZSqrt2> group_compose_exact(InstanceKind kind, const std::vector<ZSqrt2>& x,
                                        const std::vector<ZSqrt2>& y);
std::vector<ZSqrt2> group_inverse_exact(InstanceKind kind, const std::vector<ZSqrt2>& x);
std::vector<ZSqrt2> group_difference_exact(InstanceKind kind, const std::vector<ZSqrt2>& x,
                                           const std::vector<ZSqrt2>& y);

// A finite piece of a point set, canonically sorted, together with the
// region over which it is complete.  When the points come from an exact
// arithmetic scheme, `exact` carries the Z[sqrt2] coordinates in parallel
// with `pts` and set-level operations prefer it.
struct PointPatch {
    InstanceKind kind = InstanceKind::Euclidean;
    int dim = 1;
    std::vector<std::vector<double>> pts;
    std::vector<std::vector<ZSqrt2>> exact; // empty, or parallel to pts
    AxisBox region;

    bool has_exact() const { return !exact.empty(); }
    size_t size() const { return pts.size(); }

    // Sort lexicographically (carrying exact coordinates along) and drop
    // duplicates.
    void canonicalize();
};

} // namespace mset
