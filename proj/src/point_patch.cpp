#include "mset/point_patch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mset/error.hpp"

namespace mset {

int instance_dim(InstanceKind kind) {
    switch (kind) {
    case InstanceKind::Euclidean: return -1; // caller-defined
    case InstanceKind::Heisenberg: return 3;
    case InstanceKind::SL2: return 4;
    }
    return -1;
}

std::vector<double> group_identity(InstanceKind kind) {
    switch (kind) {
    case InstanceKind::Euclidean: return {};
    case InstanceKind::Heisenberg: return {0, 0, 0};
    case InstanceKind::SL2: return {1, 0, 0, 1};
    }
    return {};
}

std::vector<double> group_compose(InstanceKind kind, const std::vector<double>& x,
                                  const std::vector<double>& y) {
    switch (kind) {
    case InstanceKind::Euclidean: {
        std::vector<double> out(x.size());
        for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
        return out;
    }
    case InstanceKind::Heisenberg:
        // (x,y,z)*(x',y',z') = (x+x', y+y', z+z'+x*y')
        return {x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]};
    case InstanceKind::SL2:
        return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    }
    return {};
}

std::vector<double> group_inverse(InstanceKind kind, const std::vector<double>& x) {
    switch (kind) {
    case InstanceKind::Euclidean: {
        std::vector<double> out(x.size());
        for (size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
        return out;
    }
    case InstanceKind::Heisenberg:
        return {-x[0], -x[1], -x[2] + x[0] * x[1]};
    case InstanceKind::SL2:
        // adjugate; valid since det = 1
        return {x[3], -x[1], -x[2], x[0]};
    }
    return {};
}

std::vector<double> group_difference(InstanceKind kind, const std::vector<double>& x,
                                     const std::vector<double>& y) {
    return group_compose(kind, group_inverse(kind, x), y);
}

double identity_distance(InstanceKind kind, const std::vector<double>& v) {
    switch (kind) {
    case InstanceKind::Euclidean:
        return euclid_norm(v);
    case InstanceKind::Heisenberg:
        return std::max({std::abs(v[0]), std::abs(v[1]), std::sqrt(std::abs(v[2]))});
    case InstanceKind::SL2:
        return std::sqrt(sq(v[0] - 1) + sq(v[1]) + sq(v[2]) + sq(v[3] - 1));
    }
    return 0;
}

std::vector<ZSqrt2> group_compose_exact(InstanceKind kind, const std::vector<ZSqrt2>& x,
                                        const std::vector<ZSqrt2>& y) {
    switch (kind) {
    case InstanceKind::Euclidean: {
        std::vector<ZSqrt2> out(x.size());
        for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
        return out;
    }
    case InstanceKind::Heisenberg:
        return {x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]};
    case InstanceKind::SL2:
        return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    }
    return {};
}

std::vector<ZSqrt2> group_inverse_exact(InstanceKind kind, const std::vector<ZSqrt2>& x) {
    switch (kind) {
    case InstanceKind::Euclidean: {
        std::vector<ZSqrt2> out(x.size());
        for (size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
        return out;
    }
    case InstanceKind::Heisenberg:
        return {-x[0], -x[1], -x[2] + x[0] * x[1]};
    case InstanceKind::SL2:
        return {x[3], -x[1], -x[2], x[0]};
    }
    return {};
}

std::vector<ZSqrt2> group_difference_exact(InstanceKind kind, const std::vector<ZSqrt2>& x,
                                           const std::vector<ZSqrt2>& y) {
    return group_compose_exact(kind, group_inverse_exact(kind, x), y);
}

void PointPatch::canonicalize() {
    std::vector<size_t> order(pts.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return lex_less(pts[i], pts[j]); });
    std::vector<std::vector<double>> new_pts;
    std::vector<std::vector<ZSqrt2>> new_exact;
    new_pts.reserve(pts.size());
    bool exact_ok = has_exact() && exact.size() == pts.size();
    for (size_t idx : order) {
        if (!new_pts.empty() && new_pts.back() == pts[idx]) continue;
        new_pts.push_back(pts[idx]);
        if (exact_ok) new_exact.push_back(exact[idx]);
    }
    pts = std::move(new_pts);
    exact = std::move(new_exact);
}

} // namespace mset
