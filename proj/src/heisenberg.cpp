#include "mset/heisenberg.hpp"

#include <algorithm>
#include <cmath>

#include "mset/error.hpp"
#include "mset/scheme.hpp"
#include "mset/window.hpp"

namespace mset {

namespace {

// One-dimensional component set {w in Z[sqrt2] : |w| <= L, |w*| <= s},
// sorted by value.
std::vector<ZSqrt2> component_set(double s, double L, long long budget) {
    EuclideanScheme scheme = EuclideanScheme::zsqrt2();
    Window w = Window::box({s});
    RegularityResult reg = check_gamma_regular(scheme, w, std::max(L, 2.0));
    if (reg.verdict == RegularityVerdict::BoundaryHit)
        throw ConfigError("InvalidWindow",
                          "window half-width lies in the internal lattice projection; "
                          "choose a regular half-width");
    PointPatch patch = enumerate_model_set(scheme, w, AxisBox::centered(1, L), budget);
    std::vector<ZSqrt2> out;
    out.reserve(patch.size());
    for (auto& e : patch.exact) out.push_back(e[0]);
    return out;
}

} // namespace

PointPatch heis_enumerate(const HeisWindow& window, double T, long long budget) {
    if (!(T > 0)) throw ConfigError("InvalidRegion", "enumeration box parameter must be positive");
    std::vector<ZSqrt2> xs = component_set(window.s1, T, budget);
    std::vector<ZSqrt2> ys = component_set(window.s2, T, budget);
    std::vector<ZSqrt2> zs = component_set(window.s3, T * T, budget);
    double total = double(xs.size()) * double(ys.size()) * double(zs.size());
    if (total > double(budget))
        throw BudgetError("RegionTooLarge", "Heisenberg patch exceeds the point budget");

    PointPatch patch;
    patch.kind = InstanceKind::Heisenberg;
    patch.dim = 3;
    patch.region = AxisBox({-T, -T, -T * T}, {T, T, T * T});
    patch.pts.reserve((size_t)total);
    patch.exact.reserve((size_t)total);
    for (auto& x : xs)
        for (auto& y : ys)
            for (auto& z : zs) {
                patch.pts.push_back({x.value(), y.value(), z.value()});
                patch.exact.push_back({x, y, z});
            }
    patch.canonicalize();
    return patch;
}

std::vector<long long> heis_counts(const HeisWindow& window, const std::vector<double>& t_grid,
                                   long long budget) {
    if (t_grid.empty()) return {};
    double t_max = *std::max_element(t_grid.begin(), t_grid.end());
    std::vector<ZSqrt2> xs = component_set(window.s1, t_max, budget);
    std::vector<ZSqrt2> ys = component_set(window.s2, t_max, budget);
    std::vector<ZSqrt2> zs = component_set(window.s3, t_max * t_max, budget);

    std::vector<double> xv, yv, zv;
    for (auto& w : xs) xv.push_back(w.value());
    for (auto& w : ys) yv.push_back(w.value());
    for (auto& w : zs) zv.push_back(w.value());

    auto count_in = [](const std::vector<double>& v, double bound) {
        auto lo = std::lower_bound(v.begin(), v.end(), -bound);
        auto hi = std::upper_bound(v.begin(), v.end(), bound);
        return (long long)(hi - lo);
    };

    std::vector<long long> out;
    out.reserve(t_grid.size());
    for (double t : t_grid)
        out.push_back(count_in(xv, t) * count_in(yv, t) * count_in(zv, t * t));
    return out;
}

double heis_predicted_density(const HeisWindow& window) {
    double window_volume = 8.0 * window.s1 * window.s2 * window.s3;
    double covol = std::pow(2.0 * kSqrt2, 3);
    return window_volume / covol;
}

} // namespace mset
