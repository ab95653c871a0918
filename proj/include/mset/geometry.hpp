#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "mset/error.hpp"

namespace mset {

// Closed axis-aligned box, the region type used for enumeration requests
// and patch completeness claims.
struct AxisBox {
    std::vector<double> lo, hi;

    AxisBox() = default;
    AxisBox(std::vector<double> lo_, std::vector<double> hi_)
        : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo.size() != hi.size())
            throw ConfigError("InvalidRegion", "box bounds have mismatched dimensions");
    }

    static AxisBox centered(int dim, double half_width) {
        std::vector<double> l(dim, -half_width), h(dim, half_width);
        return AxisBox(std::move(l), std::move(h));
    }

    int dim() const { return (int)lo.size(); }

    bool valid() const {
        for (size_t i = 0; i < lo.size(); ++i)
            if (!(lo[i] <= hi[i])) return false;
        return true;
    }

    double volume() const {
        double v = 1.0;
        for (size_t i = 0; i < lo.size(); ++i) v *= std::max(0.0, hi[i] - lo[i]);
        return v;
    }

    bool contains(const std::vector<double>& p) const {
        for (size_t i = 0; i < lo.size(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }

    bool contains_open(const std::vector<double>& p) const {
        for (size_t i = 0; i < lo.size(); ++i)
            if (p[i] <= lo[i] || p[i] >= hi[i]) return false;
        return true;
    }

    bool contains_box(const AxisBox& other) const {
        for (size_t i = 0; i < lo.size(); ++i)
            if (other.lo[i] < lo[i] || other.hi[i] > hi[i]) return false;
        return true;
    }

    AxisBox inflated(double r) const {
        AxisBox out = *this;
        for (size_t i = 0; i < lo.size(); ++i) { out.lo[i] -= r; out.hi[i] += r; }
        return out;
    }

    AxisBox deflated(double r) const { return inflated(-r); }

    AxisBox translated(const std::vector<double>& t) const {
        AxisBox out = *this;
        for (size_t i = 0; i < lo.size(); ++i) { out.lo[i] += t[i]; out.hi[i] += t[i]; }
        return out;
    }

    double min_extent() const {
        double m = hi.empty() ? 0.0 : hi[0] - lo[0];
        for (size_t i = 1; i < lo.size(); ++i) m = std::min(m, hi[i] - lo[i]);
        return m;
    }
};

inline bool lex_less(const std::vector<double>& x, const std::vector<double>& y) {
    for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (x[i] < y[i]) return true;
        if (x[i] > y[i]) return false;
    }
    return x.size() < y.size();
}

inline double sq(double x) { return x * x; }

inline double euclid_norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double euclid_dist(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += sq(x[i] - y[i]);
    return std::sqrt(s);
}

// Deterministic uniform in [0,1): identical across platforms, unlike
// std::uniform_real_distribution.
template <class Rng>
double uniform01(Rng& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

} // namespace mset
