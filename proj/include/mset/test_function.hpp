#pragma once

#include <vector>

#include "mset/point_patch.hpp"

namespace mset {

// Continuous compactly supported bump: value 1 at the center, support
// radius = width.  For the group instances the profile is applied to the
// instance distance of c^{-1} g from the identity.
struct TestFunction {
    enum class Profile { Tent, TruncGauss };

    Profile profile = Profile::Tent;
    InstanceKind kind = InstanceKind::Euclidean;
    std::vector<double> center; // group coordinates
    double width = 1.0;

    static TestFunction tent(std::vector<double> center, double width,
                             InstanceKind kind = InstanceKind::Euclidean);
    static TestFunction trunc_gauss(std::vector<double> center, double width,
                                    InstanceKind kind = InstanceKind::Euclidean);

    double profile1d(double r) const;
    // Evaluate at group coordinates g.
    double operator()(const std::vector<double>& g) const;
    double support_radius() const { return width; }
};

// (f1^* * f2)(z) = integral of f1(u) f2(u + z) du over R^1, by adaptive
// Simpson quadrature to the given absolute tolerance (real-valued test
// functions, d = 1).
double correlate(const TestFunction& f1, const TestFunction& f2, double z,
                 double abs_tol = 1e-10);

} // namespace mset
