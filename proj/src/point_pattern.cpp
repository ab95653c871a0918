#include "mset/point_pattern.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mset/error.hpp"

namespace mset {

namespace {

bool euclid_1d(const PointPatch& p) {
    return p.kind == InstanceKind::Euclidean && p.dim == 1;
}

double pair_distance(const PointPatch& patch, size_t i, size_t j) {
    return identity_distance(patch.kind,
                             group_difference(patch.kind, patch.pts[i], patch.pts[j]));
}

} // namespace

double min_separation(const PointPatch& patch) {
    const size_t n = patch.size();
    if (n < 2) throw ConfigError("TooFewPoints", "min_separation needs at least two points");
    if (euclid_1d(patch)) {
        // canonically sorted: adjacent gaps suffice
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 1; i < n; ++i)
            best = std::min(best, patch.pts[i][0] - patch.pts[i - 1][0]);
        return best;
    }
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) best = std::min(best, pair_distance(patch, i, j));
    return best;
}

bool is_uniformly_discrete(const PointPatch& patch, double r) {
    if (r <= 0) return true;
    if (patch.size() < 2) return true;
    return min_separation(patch) >= r;
}

double covering_radius(const PointPatch& patch, double margin, double resolution) {
    if (patch.pts.empty())
        throw ConfigError("TooFewPoints", "covering_radius needs a non-empty patch");
    const AxisBox& region = patch.region;
    if (region.dim() == 0)
        throw ConfigError("InvalidRegion", "patch has no completeness region");
    AxisBox inner = region.deflated(margin);
    if (!inner.valid() || inner.min_extent() <= 0)
        throw ConfigError("RegionTooThin", "margin exhausts the patch region");
    if (resolution <= 0)
        resolution = patch.size() >= 2 ? min_separation(patch) / 4.0 : inner.min_extent() / 64.0;

    const int d = region.dim();
    std::vector<long long> steps(d);
    long long total = 1;
    for (int i = 0; i < d; ++i) {
        steps[i] = std::max<long long>(1, (long long)std::ceil((inner.hi[i] - inner.lo[i]) / resolution));
        total *= steps[i] + 1;
        if (total > 20'000'000)
            throw BudgetError("RegionTooLarge", "covering radius grid exceeds budget");
    }

    // d = 1: nearest distance by binary search in the sorted patch.
    std::vector<double> flat;
    if (euclid_1d(patch)) {
        flat.reserve(patch.size());
        for (auto& p : patch.pts) flat.push_back(p[0]);
    }

    double worst = 0.0;
    std::vector<long long> idx(d, 0);
    while (true) {
        std::vector<double> q(d);
        for (int i = 0; i < d; ++i)
            q[i] = inner.lo[i] + (inner.hi[i] - inner.lo[i]) * double(idx[i]) / double(steps[i]);
        double best = std::numeric_limits<double>::infinity();
        if (!flat.empty()) {
            auto it = std::lower_bound(flat.begin(), flat.end(), q[0]);
            if (it != flat.end()) best = std::min(best, *it - q[0]);
            if (it != flat.begin()) best = std::min(best, q[0] - *(it - 1));
        } else {
            for (auto& p : patch.pts)
                best = std::min(best, identity_distance(patch.kind,
                                                        group_difference(patch.kind, p, q)));
        }
        worst = std::max(worst, best);
        int i = 0;
        while (i < d && ++idx[i] > steps[i]) idx[i++] = 0;
        if (i == d) break;
    }
    return worst;
}

bool is_relatively_dense(const PointPatch& patch, double R) {
    return covering_radius(patch, R) <= R;
}

PointPatch difference_set(const PointPatch& patch, double radius) {
    if (!(radius > 0)) throw ConfigError("InvalidRegion", "difference radius must be positive");
    if (patch.region.dim() > 0 && patch.kind != InstanceKind::SL2 &&
        patch.region.min_extent() < 2.0 * radius)
        throw ConfigError("MarginTooSmall",
                          "patch region must span at least twice the difference radius");

    PointPatch out;
    out.kind = patch.kind;
    out.dim = patch.dim;
    out.region = AxisBox::centered(patch.dim, radius);
    const size_t n = patch.size();
    const bool exact = patch.has_exact();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            auto diff = group_difference(patch.kind, patch.pts[i], patch.pts[j]);
            if (identity_distance(patch.kind, diff) > radius) continue;
            if (exact) {
                auto ed = group_difference_exact(patch.kind, patch.exact[i], patch.exact[j]);
                std::vector<double> fl(ed.size());
                for (size_t c = 0; c < ed.size(); ++c) fl[c] = ed[c].value();
                out.pts.push_back(std::move(fl));
                out.exact.push_back(std::move(ed));
            } else {
                out.pts.push_back(std::move(diff));
            }
        }
    // identity is always a difference (x = y); include it explicitly
    if (n > 0) {
        auto e = group_identity(patch.kind);
        if (e.empty()) e.assign(patch.dim, 0.0);
        out.pts.push_back(e);
        if (exact) out.exact.emplace_back(patch.dim, ZSqrt2{0, 0});
        if (patch.kind == InstanceKind::SL2 && exact)
            out.exact.back() = {ZSqrt2{1, 0}, ZSqrt2{0, 0}, ZSqrt2{0, 0}, ZSqrt2{1, 0}};
    }

    if (exact) {
        // Dedupe on the exact coordinates, then rebuild floats from them.
        std::map<std::vector<std::pair<long long, long long>>, std::vector<ZSqrt2>> seen;
        for (auto& ed : out.exact) {
            std::vector<std::pair<long long, long long>> key;
            key.reserve(ed.size());
            for (auto& z : ed) key.emplace_back(z.a, z.b);
            seen.emplace(std::move(key), ed);
        }
        out.pts.clear();
        out.exact.clear();
        for (auto& [key, ed] : seen) {
            std::vector<double> fl(ed.size());
            for (size_t c = 0; c < ed.size(); ++c) fl[c] = ed[c].value();
            out.pts.push_back(std::move(fl));
            out.exact.push_back(ed);
        }
    }
    out.canonicalize();
    return out;
}

FlcResult flc_check(const PointPatch& patch, double radius, double sep_tol) {
    PointPatch diffs = difference_set(patch, radius);
    FlcResult res;
    res.difference_count = (long long)diffs.size();
    res.min_difference_gap = std::numeric_limits<double>::infinity();
    const size_t n = diffs.size();
    if (n < 2) {
        res.evidence = true;
        return res;
    }
    // After dedupe every element is distinct (exactly so for exact
    // patches).  Closest-pair sweep over the lexicographically sorted
    // list: the inner loop can stop once the leading-coordinate gap
    // already exceeds the running minimum.
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double lead = diffs.pts[j][0] - diffs.pts[i][0];
            if (lead > res.min_difference_gap && lead > sep_tol) break;
            double dist = euclid_dist(diffs.pts[i], diffs.pts[j]);
            res.min_difference_gap = std::min(res.min_difference_gap, dist);
            if (dist <= sep_tol) {
                res.evidence = false;
                res.witness = std::make_pair(diffs.pts[i], diffs.pts[j]);
                return res;
            }
        }
    }
    res.evidence = true;
    return res;
}

std::vector<long long> local_finiteness_profile(const PointPatch& patch,
                                                const std::vector<double>& box_sides) {
    std::vector<long long> out;
    out.reserve(box_sides.size());
    if (patch.pts.empty()) {
        out.assign(box_sides.size(), 0);
        return out;
    }
    for (double side : box_sides) {
        if (euclid_1d(patch)) {
            // exact sliding-window maximum over closed intervals of the
            // given length
            long long best = 0;
            size_t i = 0;
            for (size_t j = 0; j < patch.size(); ++j) {
                while (patch.pts[j][0] - patch.pts[i][0] > side) ++i;
                best = std::max(best, (long long)(j - i + 1));
            }
            out.push_back(best);
        } else {
            // grid scan of box translates across the region
            const int d = patch.dim;
            const AxisBox& region = patch.region;
            double step = side / 2.0;
            std::vector<long long> steps(d);
            for (int i = 0; i < d; ++i)
                steps[i] = std::max<long long>(1, (long long)std::ceil(
                                                      (region.hi[i] - region.lo[i]) / step));
            std::vector<long long> idx(d, 0);
            long long best = 0;
            while (true) {
                std::vector<double> lo(d), hi(d);
                for (int i = 0; i < d; ++i) {
                    lo[i] = region.lo[i] + step * double(idx[i]) - side;
                    hi[i] = lo[i] + side;
                }
                long long count = 0;
                for (auto& p : patch.pts) {
                    bool in = true;
                    for (int i = 0; i < d; ++i) in = in && p[i] >= lo[i] && p[i] <= hi[i];
                    count += in;
                }
                best = std::max(best, count);
                int i = 0;
                while (i < d && ++idx[i] > steps[i]) idx[i++] = 0;
                if (i == d) break;
            }
            out.push_back(best);
        }
    }
    return out;
}

} // namespace mset
