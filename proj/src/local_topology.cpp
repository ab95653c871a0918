#include "mset/local_topology.hpp"

#include <algorithm>
#include <cmath>

#include "mset/error.hpp"

namespace mset {

namespace {

void require_complete(const PointPatch& patch, const AxisBox& needed, const char* what) {
    if (patch.region.dim() == 0 || !patch.region.contains_box(needed))
        throw ConfigError("IncompletePatch",
                          std::string("patch is not complete over the required region for ") +
                              what);
}

std::vector<std::vector<double>> trace(const PointPatch& patch, const AxisBox& k) {
    std::vector<std::vector<double>> out;
    for (auto& p : patch.pts)
        if (k.contains(p)) out.push_back(p);
    return out;
}

bool sets_equal_tol(std::vector<std::vector<double>> a, std::vector<std::vector<double>> b,
                    double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end(), lex_less);
    std::sort(b.begin(), b.end(), lex_less);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t c = 0; c < a[i].size(); ++c)
            if (std::abs(a[i][c] - b[i][c]) > tol) return false;
    return true;
}

std::vector<std::vector<double>> translated_trace(const PointPatch& q,
                                                  const std::vector<double>& t,
                                                  const AxisBox& k) {
    std::vector<std::vector<double>> out;
    for (auto& pt : q.pts) {
        std::vector<double> moved(pt.size());
        for (size_t c = 0; c < pt.size(); ++c) moved[c] = pt[c] + t[c];
        if (k.contains(moved)) out.push_back(std::move(moved));
    }
    return out;
}

// Kronecker sequence offsets: fractional parts of sqrt(primes).
const double kAlphas[4] = {0.41421356237309515, 0.7320508075688772,
                           0.23606797749978969, 0.6457513110645906};

std::vector<double> kronecker_sample(int i, int dim, unsigned long long seed, double range) {
    std::vector<double> t(dim);
    for (int j = 0; j < dim; ++j) {
        double x = kAlphas[j % 4] * double(i + 1) + 0.618033988749895 * double(seed + 1);
        t[j] = (x - std::floor(x)) * range;
    }
    return t;
}

} // namespace

bool chabauty_hit(const PointPatch& patch, const AxisBox& v_open) {
    require_complete(patch, v_open, "chabauty_hit");
    for (auto& p : patch.pts)
        if (v_open.contains_open(p)) return true;
    return false;
}

bool chabauty_miss(const PointPatch& patch, const AxisBox& k) {
    require_complete(patch, k, "chabauty_miss");
    for (auto& p : patch.pts)
        if (k.contains(p)) return false;
    return true;
}

bool local_rubber_member(const PointPatch& q, const PointPatch& p, const AxisBox& k,
                         double eps) {
    if (!(eps > 0)) throw ConfigError("InvalidRegion", "rubber epsilon must be positive");
    AxisBox needed = k.inflated(eps);
    require_complete(q, needed, "local_rubber_member");
    require_complete(p, needed, "local_rubber_member");

    auto one_sided = [&](const PointPatch& inner, const PointPatch& outer) {
        for (auto& x : inner.pts) {
            if (!k.contains(x)) continue;
            double best = std::numeric_limits<double>::infinity();
            for (auto& y : outer.pts) best = std::min(best, euclid_dist(x, y));
            if (best > eps) return false;
        }
        return true;
    };
    return one_sided(q, p) && one_sided(p, q);
}

EntourageDecision local_entourage_member(const PointPatch& p, const PointPatch& q,
                                         const AxisBox& k, double eps, double tol) {
    if (p.kind != InstanceKind::Euclidean || q.kind != InstanceKind::Euclidean)
        throw ConfigError("UnsupportedWindowGeometry",
                          "entourage decisions implemented for Euclidean instances");
    require_complete(p, k, "local_entourage_member");
    require_complete(q, k.inflated(eps), "local_entourage_member");

    auto p_trace = trace(p, k);
    EntourageDecision dec;
    if (p_trace.empty()) {
        std::vector<double> zero(p.dim, 0.0);
        if (translated_trace(q, zero, k).empty()) {
            dec.yes = true;
            dec.witness_t = zero;
        }
        return dec;
    }
    for (auto& pp : p_trace)
        for (auto& qq : q.pts) {
            double dist = euclid_dist(pp, qq);
            if (dist >= eps) continue;
            std::vector<double> t(pp.size());
            for (size_t c = 0; c < t.size(); ++c) t[c] = pp[c] - qq[c];
            if (sets_equal_tol(translated_trace(q, t, k), p_trace, tol)) {
                dec.yes = true;
                dec.witness_t = t;
                return dec;
            }
        }
    return dec;
}

EntourageDecision entourage_oracle_grid(const PointPatch& p, const PointPatch& q,
                                        const AxisBox& k, double eps, double resolution) {
    require_complete(p, k, "entourage_oracle_grid");
    require_complete(q, k.inflated(eps), "entourage_oracle_grid");
    const int d = p.dim;
    auto p_trace = trace(p, k);
    const double match_tol = 0.75 * resolution;

    long long steps = (long long)std::floor(2.0 * eps / resolution);
    EntourageDecision dec;
    std::vector<long long> idx(d, 0);
    while (true) {
        std::vector<double> t(d);
        double norm_sq = 0;
        for (int i = 0; i < d; ++i) {
            t[i] = -eps + resolution * (double(idx[i]) + 0.5);
            norm_sq += t[i] * t[i];
        }
        if (norm_sq < eps * eps) {
            if (sets_equal_tol(translated_trace(q, t, k), p_trace, match_tol)) {
                dec.yes = true;
                dec.witness_t = t;
                return dec;
            }
        }
        int i = 0;
        while (i < d && ++idx[i] >= steps) idx[i++] = 0;
        if (i == d) break;
    }
    return dec;
}

namespace {

FlcOrbitReport run_orbit_check(const std::function<PointPatch(const std::vector<double>&)>& gen,
                               const PointPatch& reference, const AxisBox& k,
                               double kprime_radius, int n_samples, unsigned long long seed,
                               double t_range, int dim) {
    FlcOrbitReport rep;
    rep.kprime_radius = kprime_radius;
    for (int i = 0; i < n_samples; ++i) {
        std::vector<double> t = kronecker_sample(i, dim, seed, t_range);
        PointPatch shifted = gen(t);
        auto dec = local_entourage_member(shifted, reference, k,
                                          kprime_radius * (1.0 + 1e-12));
        ++rep.samples;
        if (dec.yes)
            ++rep.successes;
        else if (rep.failures.size() < 16)
            rep.failures.push_back(t);
    }
    rep.success_fraction = rep.samples ? double(rep.successes) / rep.samples : 0.0;
    return rep;
}

} // namespace

FlcOrbitReport flc_orbit_criterion(const EuclideanScheme& scheme, const Window& window,
                                   const AxisBox& k, double kprime_radius, int n_samples,
                                   unsigned long long seed, double t_range, long long budget) {
    const int d = scheme.d();
    PointPatch reference =
        enumerate_model_set(scheme, window, k.inflated(kprime_radius + 1e-9), budget);
    auto gen = [&](const std::vector<double>& t) {
        std::vector<double> neg(t.size());
        for (size_t i = 0; i < t.size(); ++i) neg[i] = -t[i];
        PointPatch base = enumerate_model_set(scheme, window, k.translated(neg), budget);
        PointPatch shifted;
        shifted.kind = InstanceKind::Euclidean;
        shifted.dim = d;
        shifted.region = k;
        for (auto& p : base.pts) {
            std::vector<double> moved(p.size());
            for (size_t c = 0; c < p.size(); ++c) moved[c] = p[c] + t[c];
            shifted.pts.push_back(std::move(moved));
        }
        shifted.canonicalize();
        return shifted;
    };
    return run_orbit_check(gen, reference, k, kprime_radius, n_samples, seed, t_range, d);
}

FlcOrbitReport flc_orbit_criterion_patch(const PointPatch& base, const AxisBox& k,
                                         double kprime_radius, int n_samples,
                                         unsigned long long seed, double t_range) {
    const int d = base.dim;
    PointPatch reference = base;
    reference.region = base.region;
    auto gen = [&](const std::vector<double>& t) {
        PointPatch shifted;
        shifted.kind = InstanceKind::Euclidean;
        shifted.dim = d;
        shifted.region = k;
        for (auto& p : base.pts) {
            std::vector<double> moved(p.size());
            for (size_t c = 0; c < p.size(); ++c) moved[c] = p[c] + t[c];
            if (k.contains(moved)) shifted.pts.push_back(std::move(moved));
        }
        shifted.canonicalize();
        return shifted;
    };
    return run_orbit_check(gen, reference, k, kprime_radius, n_samples, seed, t_range, d);
}

} // namespace mset
