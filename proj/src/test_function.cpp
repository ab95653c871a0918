#include "mset/test_function.hpp"

#include <algorithm>
#include <cmath>

#include "mset/error.hpp"

namespace mset {

TestFunction TestFunction::tent(std::vector<double> center, double width, InstanceKind kind) {
    if (!(width > 0)) throw ConfigError("InvalidWindow", "test function width must be positive");
    TestFunction f;
    f.profile = Profile::Tent;
    f.kind = kind;
    f.center = std::move(center);
    f.width = width;
    return f;
}

TestFunction TestFunction::trunc_gauss(std::vector<double> center, double width,
                                       InstanceKind kind) {
    TestFunction f = tent(std::move(center), width, kind);
    f.profile = Profile::TruncGauss;
    return f;
}

double TestFunction::profile1d(double r) const {
    r = std::abs(r);
    if (r >= width) return 0.0;
    switch (profile) {
    case Profile::Tent:
        return 1.0 - r / width;
    case Profile::TruncGauss: {
        // Gaussian clipped to zero at the support edge, rescaled to peak 1.
        const double tail = std::exp(-4.0);
        double u = r / width;
        return (std::exp(-4.0 * u * u) - tail) / (1.0 - tail);
    }
    }
    return 0.0;
}

double TestFunction::operator()(const std::vector<double>& g) const {
    return profile1d(identity_distance(kind, group_difference(kind, center, g)));
}

namespace {

double simpson(const TestFunction& f1, const TestFunction& f2, double z, double a, double b,
               double fa, double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    auto eval = [&](double u) { return f1({u}) * f2({u + z}); };
    double flm = eval(lm), frm = eval(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0)
        throw ConfigError("QuadratureFailure", "adaptive quadrature failed to converge");
    if (std::abs(left + right - whole) <= 15.0 * tol) return left + right + (left + right - whole) / 15.0;
    return simpson(f1, f2, z, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson(f1, f2, z, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

} // namespace

double correlate(const TestFunction& f1, const TestFunction& f2, double z, double abs_tol) {
    if (f1.kind != InstanceKind::Euclidean || f2.kind != InstanceKind::Euclidean ||
        f1.center.size() != 1)
        throw ConfigError("QuadratureFailure", "correlate implemented for d = 1");
    double a = std::max(f1.center[0] - f1.width, f2.center[0] - f2.width - z);
    double b = std::min(f1.center[0] + f1.width, f2.center[0] + f2.width - z);
    if (b <= a) return 0.0;

    // Split at profile kinks so each piece is smooth (tents become exact).
    std::vector<double> cuts = {a, b, f1.center[0], f2.center[0] - z};
    std::sort(cuts.begin(), cuts.end());
    auto eval = [&](double u) { return f1({u}) * f2({u + z}); };
    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = std::max(a, cuts[i]), hi = std::min(b, cuts[i + 1]);
        if (hi - lo <= 1e-15) continue;
        double m = 0.5 * (lo + hi);
        double fa = eval(lo), fm = eval(m), fb = eval(hi);
        double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        total += simpson(f1, f2, z, lo, hi, fa, fm, fb, whole, abs_tol / 2.0, 48);
    }
    return total;
}

} // namespace mset
