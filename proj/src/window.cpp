#include "mset/window.hpp"

#include <algorithm>
#include <cmath>

#include "mset/error.hpp"

namespace mset {

double unit_ball_volume(int m) {
    return std::pow(M_PI, m / 2.0) / std::tgamma(m / 2.0 + 1.0);
}

Window Window::box(std::vector<double> half_widths, std::vector<double> center) {
    Window w;
    w.kind_ = Kind::Box;
    w.dim_ = (int)half_widths.size();
    if (w.dim_ == 0) throw ConfigError("InvalidWindow", "box window needs at least one axis");
    if (center.empty()) center.assign(w.dim_, 0.0);
    if ((int)center.size() != w.dim_)
        throw ConfigError("InvalidWindow", "box center dimension mismatch");
    w.half_widths_ = std::move(half_widths);
    w.center_ = std::move(center);
    return w;
}

Window Window::ball(std::vector<double> center, double radius) {
    Window w;
    w.kind_ = Kind::Ball;
    w.dim_ = (int)center.size();
    if (w.dim_ == 0) throw ConfigError("InvalidWindow", "ball window needs a center");
    w.center_ = std::move(center);
    w.radius_ = radius;
    return w;
}

Window Window::intervals(std::vector<std::pair<double, double>> ivs) {
    Window w;
    w.kind_ = Kind::Intervals;
    w.dim_ = 1;
    std::sort(ivs.begin(), ivs.end());
    for (size_t i = 0; i < ivs.size(); ++i) {
        if (ivs[i].second < ivs[i].first)
            throw ConfigError("InvalidWindow", "interval with negative length");
        if (i > 0 && ivs[i].first <= ivs[i - 1].second)
            throw ConfigError("InvalidWindow", "intervals must be pairwise disjoint");
    }
    w.intervals_ = std::move(ivs);
    return w;
}

bool Window::is_empty() const {
    switch (kind_) {
    case Kind::Box:
        for (double h : half_widths_) if (h < 0) return true;
        return false;
    case Kind::Ball:
        return radius_ < 0;
    case Kind::Intervals:
        return intervals_.empty();
    }
    return true;
}

double Window::measure() const {
    if (is_empty()) return 0.0;
    switch (kind_) {
    case Kind::Box: {
        double v = 1.0;
        for (double h : half_widths_) v *= 2.0 * h;
        return v;
    }
    case Kind::Ball:
        return unit_ball_volume(dim_) * std::pow(radius_, dim_);
    case Kind::Intervals: {
        double v = 0.0;
        for (auto& iv : intervals_) v += iv.second - iv.first;
        return v;
    }
    }
    return 0.0;
}

bool Window::contains(const std::vector<double>& p) const {
    if (is_empty()) return false;
    switch (kind_) {
    case Kind::Box:
        for (int i = 0; i < dim_; ++i)
            if (std::abs(p[i] - center_[i]) > half_widths_[i]) return false;
        return true;
    case Kind::Ball:
        return euclid_dist(p, center_) <= radius_;
    case Kind::Intervals:
        for (auto& iv : intervals_)
            if (p[0] >= iv.first && p[0] <= iv.second) return true;
        return false;
    }
    return false;
}

double Window::boundary_distance(const std::vector<double>& p) const {
    if (is_empty()) return std::numeric_limits<double>::infinity();
    switch (kind_) {
    case Kind::Box: {
        // Inside: nearest face.  Outside: Euclidean distance to the box.
        bool inside = true;
        double inside_min = std::numeric_limits<double>::infinity();
        double out_sq = 0;
        for (int i = 0; i < dim_; ++i) {
            double d = std::abs(p[i] - center_[i]);
            if (d > half_widths_[i]) { inside = false; out_sq += sq(d - half_widths_[i]); }
            else inside_min = std::min(inside_min, half_widths_[i] - d);
        }
        return inside ? inside_min : std::sqrt(out_sq);
    }
    case Kind::Ball:
        return std::abs(euclid_dist(p, center_) - radius_);
    case Kind::Intervals: {
        double best = std::numeric_limits<double>::infinity();
        for (auto& iv : intervals_) {
            best = std::min(best, std::abs(p[0] - iv.first));
            best = std::min(best, std::abs(p[0] - iv.second));
        }
        return best;
    }
    }
    return 0.0;
}

AxisBox Window::bounding_box() const {
    std::vector<double> lo(dim_), hi(dim_);
    if (is_empty()) {
        // Degenerate box that contains nothing.
        for (int i = 0; i < dim_; ++i) { lo[i] = 1.0; hi[i] = -1.0; }
        AxisBox b; b.lo = lo; b.hi = hi;
        return b;
    }
    switch (kind_) {
    case Kind::Box:
        for (int i = 0; i < dim_; ++i) {
            lo[i] = center_[i] - half_widths_[i];
            hi[i] = center_[i] + half_widths_[i];
        }
        break;
    case Kind::Ball:
        for (int i = 0; i < dim_; ++i) { lo[i] = center_[i] - radius_; hi[i] = center_[i] + radius_; }
        break;
    case Kind::Intervals:
        lo[0] = intervals_.front().first;
        hi[0] = intervals_.back().second;
        break;
    }
    AxisBox b; b.lo = std::move(lo); b.hi = std::move(hi);
    return b;
}

namespace {

// Measure of A ∩ (A - s) for A a sorted disjoint union of intervals.
double interval_union_overlap(const std::vector<std::pair<double, double>>& ivs, double s) {
    double total = 0;
    for (auto& p : ivs)
        for (auto& q : ivs) {
            double lo = std::max(p.first, q.first - s);
            double hi = std::min(p.second, q.second - s);
            if (hi > lo) total += hi - lo;
        }
    return total;
}

// Overlap volume of two m-balls of equal radius r at center distance s.
double ball_overlap(int m, double r, double s) {
    if (s >= 2 * r) return 0.0;
    switch (m) {
    case 1:
        return 2 * r - s;
    case 2:
        return 2 * r * r * std::acos(s / (2 * r)) - 0.5 * s * std::sqrt(4 * r * r - s * s);
    case 3:
        return M_PI / 12.0 * (4 * r + s) * sq(2 * r - s);
    default:
        throw ConfigError("UnsupportedWindowGeometry",
                          "ball overlap volume implemented for m <= 3 only");
    }
}

} // namespace

double Window::overlap_measure(const std::vector<double>& shift) const {
    if (is_empty()) return 0.0;
    switch (kind_) {
    case Kind::Box: {
        double v = 1.0;
        for (int i = 0; i < dim_; ++i)
            v *= std::max(0.0, 2.0 * half_widths_[i] - std::abs(shift[i]));
        return v;
    }
    case Kind::Ball:
        return ball_overlap(dim_, radius_, euclid_norm(shift));
    case Kind::Intervals:
        return interval_union_overlap(intervals_, shift[0]);
    }
    return 0.0;
}

Window Window::difference_window() const {
    switch (kind_) {
    case Kind::Box: {
        std::vector<double> h(dim_);
        for (int i = 0; i < dim_; ++i) h[i] = 2.0 * half_widths_[i];
        return box(std::move(h));
    }
    case Kind::Ball:
        return ball(std::vector<double>(dim_, 0.0), 2.0 * radius_);
    case Kind::Intervals: {
        std::vector<std::pair<double, double>> diffs;
        for (auto& p : intervals_)
            for (auto& q : intervals_)
                diffs.emplace_back(p.first - q.second, p.second - q.first);
        // Merge overlaps so the disjointness invariant holds.
        std::sort(diffs.begin(), diffs.end());
        std::vector<std::pair<double, double>> merged;
        for (auto& d : diffs) {
            if (!merged.empty() && d.first <= merged.back().second)
                merged.back().second = std::max(merged.back().second, d.second);
            else
                merged.push_back(d);
        }
        return intervals(std::move(merged));
    }
    }
    throw ConfigError("UnsupportedWindowGeometry", "difference window");
}

Window Window::translated(const std::vector<double>& t) const {
    switch (kind_) {
    case Kind::Box: {
        std::vector<double> c = center_;
        for (int i = 0; i < dim_; ++i) c[i] += t[i];
        return box(half_widths_, std::move(c));
    }
    case Kind::Ball: {
        std::vector<double> c = center_;
        for (int i = 0; i < dim_; ++i) c[i] += t[i];
        return ball(std::move(c), radius_);
    }
    case Kind::Intervals: {
        auto ivs = intervals_;
        for (auto& iv : ivs) { iv.first += t[0]; iv.second += t[0]; }
        return intervals(std::move(ivs));
    }
    }
    throw ConfigError("UnsupportedWindowGeometry", "translate");
}

std::vector<double> Window::boundary_values_1d() const {
    if (dim_ != 1)
        throw ConfigError("UnsupportedWindowGeometry", "boundary values only defined for m = 1");
    std::vector<double> vals;
    switch (kind_) {
    case Kind::Box:
        vals = {center_[0] - half_widths_[0], center_[0] + half_widths_[0]};
        break;
    case Kind::Ball:
        vals = {center_[0] - radius_, center_[0] + radius_};
        break;
    case Kind::Intervals:
        for (auto& iv : intervals_) { vals.push_back(iv.first); vals.push_back(iv.second); }
        break;
    }
    return vals;
}

} // namespace mset
