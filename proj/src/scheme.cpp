#include "mset/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mset/error.hpp"

namespace mset {

namespace {

constexpr double kEps = 1e-9;

bool basis_is_canonical_zsqrt2(const Eigen::MatrixXd& B) {
    if (B.rows() != 2 || B.cols() != 2) return false;
    return std::abs(B(0, 0) - 1.0) < 1e-9 && std::abs(B(1, 0) - 1.0) < 1e-9 &&
           std::abs(B(0, 1) - kSqrt2) < 1e-9 && std::abs(B(1, 1) + kSqrt2) < 1e-9;
}

// Exact membership of a Z[sqrt2] element (value or conjugate) in a closed
// interval with double endpoints.  Floats decide away from the boundary;
// the exact dyadic comparison settles the guard band.
bool exact_in_interval(const ZSqrt2& x, bool conj, double lo, double hi) {
    double v = conj ? x.conj_value() : x.value();
    if (v > lo + kEps && v < hi - kEps) return true;
    if (v < lo - kEps || v > hi + kEps) return false;
    int cl = conj ? compare_conj_to(x, lo) : compare_value_to(x, lo);
    int ch = conj ? compare_conj_to(x, hi) : compare_value_to(x, hi);
    return cl >= 0 && ch <= 0;
}

bool exact_window_contains_conj(const ZSqrt2& x, const Window& w) {
    switch (w.kind()) {
    case Window::Kind::Box:
        if (w.is_empty()) return false;
        return exact_in_interval(x, true, w.center()[0] - w.half_widths()[0],
                                 w.center()[0] + w.half_widths()[0]);
    case Window::Kind::Ball:
        return exact_in_interval(x, true, w.center()[0] - w.radius(),
                                 w.center()[0] + w.radius());
    case Window::Kind::Intervals:
        for (auto& iv : w.interval_list())
            if (exact_in_interval(x, true, iv.first, iv.second)) return true;
        return false;
    }
    return false;
}

// Integer-box lattice enumeration.  Finds every integer vector n with
// basis*n inside the closed target box; the per-coordinate ranges come
// from interval arithmetic on basis^{-1}, so the search is complete.
struct BoxEnumerator {
    const Eigen::MatrixXd& B;
    std::vector<double> lo, hi;
    int k;
    std::vector<long long> n_lo, n_hi;
    // suffix interval contributions per row, for pruning
    std::vector<std::vector<double>> suf_lo, suf_hi;
    long long budget;
    long long visited = 0;

    BoxEnumerator(const Eigen::MatrixXd& basis, const Eigen::MatrixXd& basis_inv,
                  const AxisBox& target, long long budget_)
        : B(basis), lo(target.lo), hi(target.hi), k((int)basis.rows()), budget(budget_) {
        n_lo.resize(k);
        n_hi.resize(k);
        for (int i = 0; i < k; ++i) {
            double mn = 0, mx = 0;
            for (int r = 0; r < k; ++r) {
                double a = basis_inv(i, r) * lo[r], b = basis_inv(i, r) * hi[r];
                mn += std::min(a, b);
                mx += std::max(a, b);
            }
            n_lo[i] = (long long)std::ceil(mn - kEps);
            n_hi[i] = (long long)std::floor(mx + kEps);
        }
        suf_lo.assign(k + 1, std::vector<double>(k, 0.0));
        suf_hi.assign(k + 1, std::vector<double>(k, 0.0));
        for (int j = k - 1; j >= 0; --j)
            for (int r = 0; r < k; ++r) {
                double a = B(r, j) * double(n_lo[j]), b = B(r, j) * double(n_hi[j]);
                suf_lo[j][r] = suf_lo[j + 1][r] + std::min(a, b);
                suf_hi[j][r] = suf_hi[j + 1][r] + std::max(a, b);
            }
        double outer = 1.0;
        for (int i = 0; i + 1 < k; ++i)
            outer *= double(std::max<long long>(0, n_hi[i] - n_lo[i] + 1));
        if (outer > double(budget))
            throw BudgetError("RegionTooLarge",
                              "integer enumeration box exceeds the point budget");
    }

    template <class Visit>
    void run(Visit&& visit) {
        if (k == 0) return;
        for (int i = 0; i < k; ++i)
            if (n_lo[i] > n_hi[i]) return;
        std::vector<long long> n(k, 0);
        std::vector<double> zero(k, 0.0);
        recurse(0, n, zero, visit);
    }

    template <class Visit>
    void recurse(int depth, std::vector<long long>& n, const std::vector<double>& partial,
                 Visit&& visit) {
        if (depth == k - 1) {
            // Solve the feasible interval for the last coordinate directly.
            double flo = -std::numeric_limits<double>::infinity();
            double fhi = std::numeric_limits<double>::infinity();
            for (int r = 0; r < k; ++r) {
                double c = B(r, depth);
                double a = lo[r] - partial[r], b = hi[r] - partial[r];
                if (std::abs(c) < 1e-14) {
                    if (0 < a - kEps || 0 > b + kEps) return;
                    continue;
                }
                double x0 = a / c, x1 = b / c;
                flo = std::max(flo, std::min(x0, x1));
                fhi = std::min(fhi, std::max(x0, x1));
            }
            long long s = std::max(n_lo[depth], (long long)std::ceil(flo - 1e-6));
            long long e = std::min(n_hi[depth], (long long)std::floor(fhi + 1e-6));
            for (long long v = s; v <= e; ++v) {
                if (++visited > budget)
                    throw BudgetError("RegionTooLarge", "lattice enumeration budget exhausted");
                n[depth] = v;
                visit(n, partial);
            }
            return;
        }
        std::vector<double> next(k);
        for (long long v = n_lo[depth]; v <= n_hi[depth]; ++v) {
            if (++visited > budget)
                throw BudgetError("RegionTooLarge", "lattice enumeration budget exhausted");
            bool feasible = true;
            for (int r = 0; r < k; ++r) {
                next[r] = partial[r] + B(r, depth) * double(v);
                if (next[r] + suf_lo[depth + 1][r] > hi[r] + kEps ||
                    next[r] + suf_hi[depth + 1][r] < lo[r] - kEps) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                n[depth] = v;
                recurse(depth + 1, n, next, visit);
            }
        }
    }
};

} // namespace

EuclideanScheme::EuclideanScheme(int d, int m, Eigen::MatrixXd basis, ExactForm exact_form)
    : d_(d), m_(m), basis_(std::move(basis)), exact_form_(exact_form) {
    if (d < 1 || m < 1)
        throw ConfigError("InvalidScheme", "physical and internal dimensions must be positive");
    if (basis_.rows() != d + m || basis_.cols() != d + m)
        throw ConfigError("InvalidScheme", "basis must be a (d+m)x(d+m) matrix");
    double det = basis_.determinant();
    if (!(std::abs(det) > 1e-12))
        throw ConfigError("SingularBasis", "lattice basis is singular");
    covolume_ = std::abs(det);
    basis_inv_ = basis_.inverse();
    if (exact_form_ == ExactForm::ZSqrt2Ring && !basis_is_canonical_zsqrt2(basis_))
        throw ConfigError("InvalidScheme",
                          "exact_form zsqrt2 requires the canonical basis (1,1),(sqrt2,-sqrt2)");
}

EuclideanScheme EuclideanScheme::zsqrt2() {
    Eigen::MatrixXd B(2, 2);
    B << 1.0, kSqrt2, 1.0, -kSqrt2;
    return EuclideanScheme(1, 1, B, ExactForm::ZSqrt2Ring);
}

std::vector<double> EuclideanScheme::physical_part(const Eigen::VectorXd& v) const {
    std::vector<double> out(d_);
    for (int i = 0; i < d_; ++i) out[i] = v(i);
    return out;
}

std::vector<double> EuclideanScheme::internal_part(const Eigen::VectorXd& v) const {
    std::vector<double> out(m_);
    for (int i = 0; i < m_; ++i) out[i] = v(d_ + i);
    return out;
}

Eigen::VectorXd EuclideanScheme::lattice_point(const std::vector<long long>& n) const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(d_ + m_);
    for (int j = 0; j < d_ + m_; ++j) x += basis_.col(j) * double(n[j]);
    return x;
}

std::vector<LatticeHit> enumerate_lattice(const EuclideanScheme& scheme,
                                          const AxisBox& phys_box, const AxisBox& internal_box,
                                          long long budget) {
    if (phys_box.dim() != scheme.d() || internal_box.dim() != scheme.m())
        throw ConfigError("InvalidRegion", "region dimensions do not match the scheme");
    AxisBox target;
    target.lo = phys_box.lo;
    target.hi = phys_box.hi;
    target.lo.insert(target.lo.end(), internal_box.lo.begin(), internal_box.lo.end());
    target.hi.insert(target.hi.end(), internal_box.hi.begin(), internal_box.hi.end());
    std::vector<LatticeHit> hits;
    if (!target.valid()) return hits;

    const int k = scheme.ambient_dim();
    BoxEnumerator en(scheme.basis(), scheme.basis_inverse(), target, budget);
    en.run([&](const std::vector<long long>& n, const std::vector<double>& partial) {
        std::vector<double> point(k);
        for (int r = 0; r < k; ++r) point[r] = partial[r] + scheme.basis()(r, k - 1) * double(n[k - 1]);
        LatticeHit hit;
        hit.phys.assign(point.begin(), point.begin() + scheme.d());
        hit.internal.assign(point.begin() + scheme.d(), point.end());
        if (!phys_box.contains(hit.phys) || !internal_box.contains(hit.internal)) return;
        hit.coords = n;
        hits.push_back(std::move(hit));
    });
    return hits;
}

PointPatch enumerate_model_set(const EuclideanScheme& scheme, const Window& window,
                               const AxisBox& region, long long budget) {
    if (region.dim() != scheme.d())
        throw ConfigError("InvalidRegion", "region dimension does not match the scheme");
    if (window.dim() != scheme.m())
        throw ConfigError("InvalidWindow", "window dimension does not match the scheme");

    PointPatch patch;
    patch.kind = InstanceKind::Euclidean;
    patch.dim = scheme.d();
    patch.region = region;
    if (window.is_empty() || !region.valid()) return patch;

    const bool exact = scheme.exact();
    for (const LatticeHit& hit :
         enumerate_lattice(scheme, region, window.bounding_box(), budget)) {
        if (exact) {
            ZSqrt2 x{hit.coords[0], hit.coords[1]};
            if (!exact_window_contains_conj(x, window)) continue;
            if (!exact_in_interval(x, false, region.lo[0], region.hi[0])) continue;
            patch.pts.push_back({x.value()});
            patch.exact.push_back({x});
        } else {
            if (!window.contains(hit.internal)) continue;
            patch.pts.push_back(hit.phys);
        }
    }
    patch.canonicalize();
    return patch;
}

std::vector<double> star_map(const EuclideanScheme& scheme, const std::vector<double>& phys,
                             double internal_bound, double tol) {
    if ((int)phys.size() != scheme.d())
        throw ConfigError("InvalidRegion", "physical point dimension mismatch");
    if (scheme.exact()) {
        ZSqrt2 internal = star_map_exact(scheme, phys[0], internal_bound, tol);
        return {internal.value()};
    }
    AxisBox pb, ib;
    for (double c : phys) { pb.lo.push_back(c - tol); pb.hi.push_back(c + tol); }
    ib = AxisBox::centered(scheme.m(), internal_bound);
    auto hits = enumerate_lattice(scheme, pb, ib);
    if (hits.size() != 1)
        throw ConfigError("NotALatticeProjection",
                          hits.empty() ? "no lattice point matches the physical input"
                                       : "physical input matches several lattice points");
    return hits[0].internal;
}

ZSqrt2 star_map_exact(const EuclideanScheme& scheme, double phys, double internal_bound,
                      double tol) {
    if (!scheme.exact())
        throw ConfigError("NotExact", "exact star map requires the zsqrt2 scheme");
    auto x = zsqrt2_from_value(phys, internal_bound, tol);
    if (!x)
        throw ConfigError("NotALatticeProjection", "no lattice point matches the physical input");
    return x->conj(); // internal projection as an exact element
}

RegularityResult check_gamma_regular(const EuclideanScheme& scheme, const Window& window,
                                     double search_radius, double tol, long long budget) {
    if (!(search_radius > 0))
        throw ConfigError("InvalidRegion", "search radius must be positive");
    RegularityResult res;
    const bool exact = scheme.exact() && window.dim() == 1;
    AxisBox pb = AxisBox::centered(scheme.d(), search_radius);
    AxisBox ib = window.bounding_box().inflated(std::max(10.0 * tol, 0.5));

    std::vector<LatticeHit> hits;
    try {
        hits = enumerate_lattice(scheme, pb, ib, budget);
    } catch (const BudgetError&) {
        res.verdict = RegularityVerdict::Inconclusive;
        return res;
    }

    std::vector<double> boundary_1d;
    if (exact) boundary_1d = window.boundary_values_1d();
    for (const LatticeHit& hit : hits) {
        double dist = window.boundary_distance(hit.internal);
        if (dist < res.min_boundary_distance) {
            res.min_boundary_distance = dist;
            res.witness_phys = hit.phys;
            res.witness_internal = hit.internal;
        }
        if (exact && dist <= tol) {
            ZSqrt2 x{hit.coords[0], hit.coords[1]};
            ZSqrt2 conj = x.conj(); // internal part as exact element
            for (double q : boundary_1d)
                if (zsqrt2_equals_dyadic(conj, q)) {
                    res.verdict = RegularityVerdict::BoundaryHit;
                    res.exact = true;
                    res.min_boundary_distance = 0.0;
                    res.witness_phys = hit.phys;
                    res.witness_internal = hit.internal;
                    return res;
                }
        }
    }
    if (exact) {
        // No exact boundary hit among all candidates: regular over the
        // searched range, regardless of how small the margin is.
        res.verdict = RegularityVerdict::Regular;
        res.exact = true;
        return res;
    }
    if (res.min_boundary_distance <= tol)
        res.verdict = RegularityVerdict::BoundaryHit;
    else if (res.min_boundary_distance <= 10.0 * tol)
        res.verdict = RegularityVerdict::Inconclusive;
    else
        res.verdict = RegularityVerdict::Regular;
    return res;
}

double model_set_covolume(const EuclideanScheme& scheme, const Window& window) {
    double mw = window.measure();
    if (!(mw > 0)) throw ConfigError("ZeroMeasureWindow", "window has zero measure");
    return scheme.covolume() / mw;
}

double predicted_density(const EuclideanScheme& scheme, const Window& window) {
    return 1.0 / model_set_covolume(scheme, window);
}

TorusPoint torus_reduce(const EuclideanScheme& scheme, const Eigen::VectorXd& ambient) {
    Eigen::VectorXd u = scheme.basis_inverse() * ambient;
    for (int i = 0; i < u.size(); ++i) {
        u(i) -= std::floor(u(i));
        // Ties at the upper face break toward 0.
        if (u(i) > 1.0 - 1e-12) u(i) = 0.0;
    }
    TorusPoint y;
    y.reduced = u;
    y.ambient = scheme.basis() * u;
    return y;
}

TorusPoint torus_parametrize(const EuclideanScheme& scheme, const std::vector<double>& g) {
    if ((int)g.size() != scheme.d())
        throw ConfigError("InvalidRegion", "translation vector dimension mismatch");
    Eigen::VectorXd v = Eigen::VectorXd::Zero(scheme.ambient_dim());
    for (int i = 0; i < scheme.d(); ++i) v(i) = g[i];
    return torus_reduce(scheme, v);
}

double periodization_on_torus_impl(const EuclideanScheme& scheme, const Window& window,
                                   const std::function<double(const std::vector<double>&)>& f,
                                   const std::vector<double>& f_center, double f_radius,
                                   const TorusPoint& y, double cutoff, long long budget) {
    std::vector<double> y_phys(scheme.d()), y_int(scheme.m());
    for (int i = 0; i < scheme.d(); ++i) y_phys[i] = y.ambient(i);
    for (int i = 0; i < scheme.m(); ++i) y_int[i] = y.ambient(scheme.d() + i);

    AxisBox phys_box;
    for (int i = 0; i < scheme.d(); ++i) {
        phys_box.lo.push_back(f_center[i] - f_radius - y_phys[i]);
        phys_box.hi.push_back(f_center[i] + f_radius - y_phys[i]);
        if (phys_box.lo.back() < -cutoff - kEps || phys_box.hi.back() > cutoff + kEps)
            throw ConfigError("CutoffTooSmall",
                              "cutoff does not cover the shifted support of f");
    }
    std::vector<double> neg_y_int(y_int);
    for (double& c : neg_y_int) c = -c;
    AxisBox internal_box = window.bounding_box().translated(neg_y_int);

    double total = 0.0;
    for (const LatticeHit& hit : enumerate_lattice(scheme, phys_box, internal_box, budget)) {
        std::vector<double> shifted_int(scheme.m());
        for (int i = 0; i < scheme.m(); ++i) shifted_int[i] = y_int[i] + hit.internal[i];
        if (!window.contains(shifted_int)) continue;
        std::vector<double> x(scheme.d());
        for (int i = 0; i < scheme.d(); ++i) x[i] = y_phys[i] + hit.phys[i];
        total += f(x);
    }
    return total;
}

bool EuclideanScheme::check_projection_injective(double radius, double tol) const {
    AxisBox pb = AxisBox::centered(d_, tol);
    AxisBox ib = AxisBox::centered(m_, radius);
    for (const LatticeHit& hit : enumerate_lattice(*this, pb, ib)) {
        bool zero = true;
        for (long long c : hit.coords) zero = zero && c == 0;
        if (!zero) return false;
    }
    return true;
}

double EuclideanScheme::internal_density_gap(const Window& window, double box_radius,
                                             long long budget) const {
    AxisBox pb = AxisBox::centered(d_, box_radius);
    AxisBox ib = window.bounding_box();
    std::vector<std::vector<double>> internals;
    for (const LatticeHit& hit : enumerate_lattice(*this, pb, ib, budget))
        if (window.contains(hit.internal)) internals.push_back(hit.internal);
    if (internals.empty()) return std::numeric_limits<double>::infinity();

    // Sample the window on a deterministic grid and report the largest
    // distance to the projected lattice points.
    AxisBox bb = window.bounding_box();
    int per_axis = std::max(2, (int)std::floor(std::pow(1e5, 1.0 / m_)));
    std::vector<int> idx(m_, 0);
    double worst = 0.0;
    while (true) {
        std::vector<double> p(m_);
        for (int i = 0; i < m_; ++i)
            p[i] = bb.lo[i] + (bb.hi[i] - bb.lo[i]) * (idx[i] + 0.5) / per_axis;
        if (window.contains(p)) {
            double best = std::numeric_limits<double>::infinity();
            for (auto& q : internals) best = std::min(best, euclid_dist(p, q));
            worst = std::max(worst, best);
        }
        int i = 0;
        while (i < m_ && ++idx[i] == per_axis) idx[i++] = 0;
        if (i == m_) break;
    }
    return worst;
}

} // namespace mset
