#include "mset/autocorrelation.hpp"

#include <algorithm>
#include <cmath>

#include "mset/error.hpp"

namespace mset {

namespace {

std::vector<double> validated_grid(const std::vector<double>& g) {
    if (g.empty()) throw ConfigError("InvalidRegion", "empty t grid");
    for (size_t i = 0; i < g.size(); ++i)
        if (!(g[i] > 0) || (i > 0 && g[i] <= g[i - 1]))
            throw ConfigError("InvalidRegion", "t grid must be strictly increasing and positive");
    return g;
}

} // namespace

SigmaTrace sigma_trace(const EuclideanScheme& scheme, const Window& window,
                       const TestFunction& f, const std::vector<double>& t_grid,
                       long long budget) {
    if (scheme.d() != 1 || f.center.size() != 1)
        throw ConfigError("InvalidRegion", "sigma trace implemented for d = 1 schemes");
    std::vector<double> grid = validated_grid(t_grid);
    const double t_max = grid.back();
    const double w = f.support_radius();
    // Outer points need F_{t_max}; inner points extend by the support of
    // f around the shifted center.
    const double margin = std::abs(f.center[0]) + w;
    PointPatch patch = enumerate_model_set(scheme, window,
                                           AxisBox::centered(1, t_max + margin), budget);
    std::vector<double> xs;
    xs.reserve(patch.size());
    for (auto& p : patch.pts) xs.push_back(p[0]);

    SigmaTrace trace;
    for (double t : grid) {
        auto lo = std::lower_bound(xs.begin(), xs.end(), -t);
        auto hi = std::upper_bound(xs.begin(), xs.end(), t);
        long long count = hi - lo;
        double sum = 0.0;
        for (auto it = lo; it != hi; ++it) {
            double x = *it;
            // inner points y with y - x within the support of f
            double ylo = x + f.center[0] - w, yhi = x + f.center[0] + w;
            auto jt = std::lower_bound(xs.begin(), xs.end(), ylo);
            for (; jt != xs.end() && *jt <= yhi; ++jt) sum += f({*jt - x});
        }
        trace.t.push_back(t);
        trace.count.push_back(count);
        trace.volume.push_back(2.0 * t);
        trace.sigma.push_back(sum / (2.0 * t));
    }
    return trace;
}

AtomicMeasure theoretical_autocorrelation(const EuclideanScheme& scheme, const Window& window,
                                          double cutoff, long long budget) {
    if (!(window.measure() > 0))
        throw ConfigError("ZeroMeasureWindow", "window has zero measure");
    if (cutoff < 0) throw ConfigError("InvalidRegion", "cutoff must be nonnegative");
    if (window.kind() == Window::Kind::Ball && scheme.m() > 3)
        throw ConfigError("UnsupportedWindowGeometry",
                          "ball-window overlap volumes implemented for m <= 3");

    // Atoms live on lattice projections whose internal part keeps the
    // window overlapping itself: enumerate with the difference window.
    Window diff = window.difference_window();
    AxisBox region = AxisBox::centered(scheme.d(), cutoff + 1e-12);
    PointPatch support = enumerate_model_set(scheme, diff, region, budget);

    const double covol = scheme.covolume();
    AtomicMeasure measure;
    measure.cutoff = cutoff;
    for (size_t i = 0; i < support.size(); ++i) {
        std::vector<double> internal;
        if (support.has_exact())
            internal = {support.exact[i][0].conj_value()};
        else
            internal = star_map(scheme, support.pts[i],
                                euclid_norm(diff.bounding_box().hi) + 1.0);
        double weight = window.overlap_measure(internal) / covol;
        if (weight <= 0) continue;
        if (euclid_norm(support.pts[i]) > cutoff) continue;
        measure.atoms.push_back({support.pts[i], weight});
    }
    std::sort(measure.atoms.begin(), measure.atoms.end(),
              [](const auto& x, const auto& y) { return lex_less(x.loc, y.loc); });
    return measure;
}

double measure_apply(const AtomicMeasure& measure, const TestFunction& f) {
    double sum = 0.0;
    for (auto& atom : measure.atoms) sum += atom.weight * f(atom.loc);
    return sum;
}

GramReport positive_definiteness_gram(const AtomicMeasure& measure,
                                      const std::vector<TestFunction>& functions,
                                      double quad_tol) {
    const int n = (int)functions.size();
    if (n == 0) throw ConfigError("InvalidRegion", "gram check needs at least one function");
    GramReport rep;
    rep.gram.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double m = 0.0;
            for (auto& atom : measure.atoms) {
                double corr = correlate(functions[i], functions[j], atom.loc[0], quad_tol);
                m += atom.weight * corr;
            }
            rep.gram(i, j) = m;
            rep.gram(j, i) = m;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rep.gram);
    rep.min_eigenvalue = solver.eigenvalues().minCoeff();
    rep.trace = rep.gram.trace();
    rep.positive = rep.min_eigenvalue >= -1e-8 * rep.trace;
    return rep;
}

BoundTrace density_bound_trace(const std::vector<double>& t_grid,
                               const std::vector<long long>& counts,
                               const std::vector<double>& volumes) {
    if (t_grid.size() != counts.size() || t_grid.size() != volumes.size() || t_grid.empty())
        throw ConfigError("InvalidRegion", "bound trace inputs must have matching lengths");
    BoundTrace bt;
    bt.t = t_grid;
    bt.count = counts;
    bt.volume = volumes;
    for (size_t i = 0; i < t_grid.size(); ++i) {
        double r = double(counts[i]) / volumes[i];
        bt.ratio.push_back(r);
        bt.sup_ratio = std::max(bt.sup_ratio, r);
    }
    size_t half = t_grid.size() / 2;
    double mx = 0, mn = std::numeric_limits<double>::infinity();
    for (size_t i = half; i < t_grid.size(); ++i) {
        mx = std::max(mx, bt.ratio[i]);
        mn = std::min(mn, bt.ratio[i]);
    }
    bt.top_half_max_over_min = mn > 0 ? mx / mn : std::numeric_limits<double>::infinity();
    return bt;
}

BoundTrace density_bound_trace_euclidean(const EuclideanScheme& scheme, const Window& window,
                                         const std::vector<double>& t_grid, long long budget) {
    if (scheme.d() != 1)
        throw ConfigError("InvalidRegion", "box-family bound trace implemented for d = 1");
    std::vector<double> grid = validated_grid(t_grid);
    PointPatch patch = enumerate_model_set(scheme, window,
                                           AxisBox::centered(1, grid.back()), budget);
    std::vector<double> xs;
    for (auto& p : patch.pts) xs.push_back(p[0]);
    std::vector<long long> counts;
    std::vector<double> volumes;
    for (double t : grid) {
        auto lo = std::lower_bound(xs.begin(), xs.end(), -t);
        auto hi = std::upper_bound(xs.begin(), xs.end(), t);
        counts.push_back(hi - lo);
        volumes.push_back(2.0 * t);
    }
    return density_bound_trace(grid, counts, volumes);
}

RatioTrace sl2_sigma_ratio(const TestFunction& f1, const TestFunction& f2,
                           const std::vector<double>& t_grid, double rho, int entry_bound,
                           long long budget) {
    std::vector<double> grid = validated_grid(t_grid);
    const double t_max = grid.back();

    // Margin so the inner sum can range over all of P0: for y = x s with
    // s in supp f, d(i, y.i) <= t_max + max displacement over the support.
    auto support_margin = [](const TestFunction& f) {
        SL2Element c{f.center[0], f.center[1], f.center[2], f.center[3]};
        double cn = std::sqrt(sq(c.a) + sq(c.b) + sq(c.c) + sq(c.d));
        double bound = cn * (1.0 + f.width) + f.width; // |s| <= |c| + |c||c^-1 s - I|
        return std::acosh(std::max(1.0, bound * bound / 2.0));
    };
    double margin = std::max(support_margin(f1), support_margin(f2));
    // Inner sums range over all of P0 within the support margin; the
    // integer box must stay complete out to t_max + margin, so widen the
    // user's entry bound to the implied-complete one when needed.
    double value_bound = std::sqrt(2.0 * std::cosh(t_max + margin));
    int n_eff = std::max(entry_bound, (int)std::ceil((value_bound + 1.0 + rho) / 2.0) + 1);
    SL2EnumResult en = sl2_enumerate(rho, t_max + margin, n_eff, budget);
    const PointPatch& patch = en.patch;

    RatioTrace rt;
    rt.points_enumerated = (long long)patch.size();
    const size_t n = patch.size();
    std::vector<double> coshd(n);
    for (size_t i = 0; i < n; ++i) {
        SL2Element g{patch.pts[i][0], patch.pts[i][1], patch.pts[i][2], patch.pts[i][3]};
        coshd[i] = sl2_cosh_displacement(g);
    }

    // c^{-1} for both test-function centers, flattened for the hot loop.
    auto inv4 = [](const std::vector<double>& c, double out[4]) {
        out[0] = c[3]; out[1] = -c[1]; out[2] = -c[2]; out[3] = c[0];
    };
    double c1inv[4], c2inv[4];
    inv4(f1.center, c1inv);
    inv4(f2.center, c2inv);
    auto eval = [](const TestFunction& f, const double cinv[4], const double g[4]) {
        double m0 = cinv[0] * g[0] + cinv[1] * g[2];
        double m1 = cinv[0] * g[1] + cinv[1] * g[3];
        double m2 = cinv[2] * g[0] + cinv[3] * g[2];
        double m3 = cinv[2] * g[1] + cinv[3] * g[3];
        double dist = std::sqrt(sq(m0 - 1) + sq(m1) + sq(m2) + sq(m3 - 1));
        return f.profile1d(dist);
    };

    for (double t : grid) {
        double ct = std::cosh(t);
        double s1 = 0, s2 = 0;
        for (size_t i = 0; i < n; ++i) {
            if (coshd[i] > ct) continue;
            const double* x = patch.pts[i].data();
            double xinv[4] = {x[3], -x[1], -x[2], x[0]};
            for (size_t j = 0; j < n; ++j) {
                const double* y = patch.pts[j].data();
                double d[4] = {xinv[0] * y[0] + xinv[1] * y[2], xinv[0] * y[1] + xinv[1] * y[3],
                               xinv[2] * y[0] + xinv[3] * y[2], xinv[2] * y[1] + xinv[3] * y[3]};
                s1 += eval(f1, c1inv, d);
                s2 += eval(f2, c2inv, d);
            }
        }
        double vol = hyp_ball_volume(t);
        rt.t.push_back(t);
        rt.sigma1.push_back(s1 / vol);
        rt.sigma2.push_back(s2 / vol);
        rt.ratio.push_back(s2 != 0 ? (s1 / vol) / (s2 / vol)
                                   : std::numeric_limits<double>::quiet_NaN());
    }
    return rt;
}

} // namespace mset
