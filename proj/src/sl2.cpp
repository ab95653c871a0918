#include "mset/sl2.hpp"

#include <algorithm>
#include <cmath>

#include "mset/error.hpp"
#include "mset/scheme.hpp"
#include "mset/window.hpp"

namespace mset {

namespace {

// {w in Z[sqrt2] : |w| <= val_bound, conj(w) in [clo, chi], integer
// coords bounded by N}.
std::vector<ZSqrt2> entry_candidates(double val_bound, double clo, double chi, int N,
                                     long long budget) {
    EuclideanScheme scheme = EuclideanScheme::zsqrt2();
    Window w = Window::intervals({{clo, chi}});
    PointPatch patch =
        enumerate_model_set(scheme, w, AxisBox::centered(1, val_bound), budget);
    std::vector<ZSqrt2> out;
    for (auto& e : patch.exact) {
        const ZSqrt2& z = e[0];
        if (std::llabs(z.a) <= N && std::llabs(z.b) <= N) out.push_back(z);
    }
    return out;
}

struct Attempt {
    std::vector<SL2Exact> hits;
    double min_window_margin = std::numeric_limits<double>::infinity();
    long long scanned = 0;
};

Attempt enumerate_once(double rho, double cosh_t, int N, long long budget) {
    const double M = std::sqrt(2.0 * cosh_t);
    std::vector<ZSqrt2> diag = entry_candidates(M, 1.0 - rho, 1.0 + rho, N, budget);
    std::vector<ZSqrt2> off = entry_candidates(M, -rho, rho, N, budget);

    double est = double(diag.size()) * double(off.size()) * double(off.size());
    if (est > double(budget))
        throw BudgetError("EnumerationBudget", "SL2 candidate scan exceeds the budget");

    const ZSqrt2 one{1, 0};
    const double rho_sq = rho * rho;
    Attempt at;

    auto consider = [&](const SL2Exact& g) {
        // both Galois components must have det 1; d was solved from the
        // determinant equation, so this is a consistency assertion
        if (g.det() != one) return;
        ZSqrt2 s = g.a * g.a + g.b * g.b + g.c * g.c + g.d * g.d;
        double sv = s.value();
        if (sv > 2.0 * cosh_t + 1e-9) return;
        if (sv > 2.0 * cosh_t - 1e-9 && compare_value_to(s, 2.0 * cosh_t) > 0) return;
        ZSqrt2 u = g.a - one, v = g.d - one;
        ZSqrt2 q = u * u + g.b * g.b + g.c * g.c + v * v;
        double qc = q.conj_value();
        double margin = std::abs(std::sqrt(std::max(0.0, qc)) - rho);
        at.min_window_margin = std::min(at.min_window_margin, margin);
        if (qc > rho_sq + 1e-12) return;
        if (qc > rho_sq - 1e-12 && compare_conj_to(q, rho_sq) > 0) return;
        at.hits.push_back(g);
    };

    for (const ZSqrt2& a : diag) {
        double av = a.value();
        for (const ZSqrt2& b : off) {
            double bv = b.value();
            if (av * av + bv * bv > 2.0 * cosh_t + 1e-9) continue;
            for (const ZSqrt2& c : off) {
                ++at.scanned;
                if (at.scanned > budget)
                    throw BudgetError("EnumerationBudget", "SL2 candidate scan budget exhausted");
                double cv = c.value();
                if (av * av + bv * bv + cv * cv > 2.0 * cosh_t + 1e-9) continue;
                if (a.is_zero()) continue; // handled below
                auto d = zsqrt2_divide(one + b * c, a);
                if (!d) continue;
                if (std::llabs(d->a) > N || std::llabs(d->b) > N) continue;
                consider({a, b, c, *d});
            }
        }
    }
    // a = 0: the determinant forces b c = -1, so b is a unit.
    for (const ZSqrt2& b : off) {
        if (!b.is_unit()) continue;
        ZSqrt2 c = -b.inv();
        if (std::llabs(c.a) > N || std::llabs(c.b) > N) continue;
        double cv = c.value(), bv = b.value();
        if (std::abs(cv) > M + 1e-9 || std::abs(c.conj_value()) > rho + 1e-9) continue;
        for (const ZSqrt2& d : diag) {
            if (++at.scanned > budget)
                throw BudgetError("EnumerationBudget", "SL2 candidate scan budget exhausted");
            double dv = d.value();
            if (bv * bv + cv * cv + dv * dv > 2.0 * cosh_t + 1e-9) continue;
            consider({ZSqrt2{0, 0}, b, c, d});
        }
    }
    return at;
}

} // namespace

SL2EnumResult sl2_enumerate(double rho, double t, int entry_bound, long long budget) {
    if (!(rho > 0)) throw ConfigError("InvalidWindow", "window radius must be positive");
    if (!(t >= 0)) throw ConfigError("InvalidRegion", "displacement bound must be nonnegative");
    if (entry_bound < 1) throw ConfigError("InvalidScheme", "entry bound must be positive");

    const double cosh_t = std::cosh(t);
    const double M = std::sqrt(2.0 * cosh_t);

    SL2EnumResult res;
    res.t = t;
    res.entry_bound = entry_bound;
    res.implied_entry_bound = (int)std::ceil((M + 1.0 + rho) / 2.0) + 1;

    Attempt at;
    double rho_used = rho;
    for (int tries = 0; tries < 5; ++tries) {
        at = enumerate_once(rho_used, cosh_t, entry_bound, budget);
        if (at.min_window_margin > 1e-6) break;
        rho_used += 1e-5; // nudge off the window boundary
    }
    res.rho_used = rho_used;
    res.candidates_scanned = at.scanned;

    PointPatch patch;
    patch.kind = InstanceKind::SL2;
    patch.dim = 4;
    patch.region = AxisBox::centered(4, M);
    for (const SL2Exact& g : at.hits) {
        patch.pts.push_back({g.a.value(), g.b.value(), g.c.value(), g.d.value()});
        patch.exact.push_back({g.a, g.b, g.c, g.d});
        for (const ZSqrt2* z : {&g.a, &g.b, &g.c, &g.d})
            if (std::llabs(z->a) == entry_bound || std::llabs(z->b) == entry_bound)
                res.boundary_box_hit = true;
    }
    patch.canonicalize();
    res.patch = std::move(patch);
    return res;
}

} // namespace mset
