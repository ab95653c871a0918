#include "mset/averaging.hpp"

#include <algorithm>
#include <cmath>

#include "mset/error.hpp"
#include "mset/sl2.hpp"

namespace mset {

double AveragingSequence::volume(double t) const {
    switch (family) {
    case Family::Box:
        return std::pow(2.0 * t, d);
    case Family::HeisBox:
        return 8.0 * t * t * t * t;
    case Family::HypBall:
        return hyp_ball_volume(t);
    }
    return 0;
}

bool AveragingSequence::member(const std::vector<double>& g, double t) const {
    switch (family) {
    case Family::Box:
        for (double c : g)
            if (std::abs(c) > t) return false;
        return true;
    case Family::HeisBox:
        return std::abs(g[0]) <= t && std::abs(g[1]) <= t && std::abs(g[2]) <= t * t;
    case Family::HypBall: {
        SL2Element m{g[0], g[1], g[2], g[3]};
        return sl2_cosh_displacement(m) <= std::cosh(t);
    }
    }
    return false;
}

InstanceKind AveragingSequence::instance() const {
    switch (family) {
    case Family::Box: return InstanceKind::Euclidean;
    case Family::HeisBox: return InstanceKind::Heisenberg;
    case Family::HypBall: return InstanceKind::SL2;
    }
    return InstanceKind::Euclidean;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    if (n <= 1) { v.push_back((lo + hi) / 2.0); return v; }
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * double(i) / double(n - 1));
    return v;
}

SL2Element rotation(double theta) {
    return {std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta)};
}

SL2Element kak(double theta1, double r, double theta2) {
    SL2Element a{std::exp(r / 2.0), 0, 0, std::exp(-r / 2.0)};
    return sl2_compose(sl2_compose(rotation(theta1), a), rotation(theta2));
}

// Deterministic sample of F_t, weighted toward the boundary where the
// inflation bound binds.
std::vector<std::vector<double>> sample_set(const AveragingSequence& seq, double t, int n) {
    std::vector<std::vector<double>> out;
    switch (seq.family) {
    case AveragingSequence::Family::Box: {
        std::vector<int> idx(seq.d, 0);
        auto grid = linspace(-t, t, n);
        while (true) {
            std::vector<double> g(seq.d);
            for (int i = 0; i < seq.d; ++i) g[i] = grid[idx[i]];
            out.push_back(g);
            int i = 0;
            while (i < seq.d && ++idx[i] == n) idx[i++] = 0;
            if (i == seq.d) break;
        }
        return out;
    }
    case AveragingSequence::Family::HeisBox:
        for (double x : linspace(-t, t, n))
            for (double y : linspace(-t, t, n))
                for (double z : linspace(-t * t, t * t, n)) out.push_back({x, y, z});
        return out;
    case AveragingSequence::Family::HypBall:
        for (double th1 : linspace(0, M_PI, n))
            for (double r : linspace(0, t, n))
                for (double th2 : linspace(0, M_PI, n)) {
                    SL2Element g = kak(th1, r, th2);
                    out.push_back({g.a, g.b, g.c, g.d});
                }
        return out;
    }
    return out;
}

// Deterministic sample of the delta-ball around the identity in the
// instance metric.
std::vector<std::vector<double>> sample_ball(const AveragingSequence& seq, double delta, int n) {
    std::vector<std::vector<double>> out;
    if (delta <= 0) {
        auto e = group_identity(seq.instance());
        if (e.empty()) e.assign(seq.d, 0.0);
        out.push_back(e);
        return out;
    }
    switch (seq.family) {
    case AveragingSequence::Family::Box: {
        std::vector<int> idx(seq.d, 0);
        auto grid = linspace(-delta, delta, n);
        while (true) {
            std::vector<double> s(seq.d);
            double norm_sq = 0;
            for (int i = 0; i < seq.d; ++i) { s[i] = grid[idx[i]]; norm_sq += s[i] * s[i]; }
            if (norm_sq <= delta * delta + 1e-15) out.push_back(s);
            int i = 0;
            while (i < seq.d && ++idx[i] == n) idx[i++] = 0;
            if (i == seq.d) break;
        }
        return out;
    }
    case AveragingSequence::Family::HeisBox:
        // quasi-norm ball: |x|, |y| <= delta, |z| <= delta^2
        for (double x : linspace(-delta, delta, n))
            for (double y : linspace(-delta, delta, n))
                for (double z : linspace(-delta * delta, delta * delta, n))
                    out.push_back({x, y, z});
        return out;
    case AveragingSequence::Family::HypBall:
        for (double th1 : linspace(0, M_PI, n))
            for (double r : linspace(0, delta, n))
                for (double th2 : linspace(0, M_PI, n)) {
                    SL2Element s = kak(th1, r, th2);
                    out.push_back({s.a, s.b, s.c, s.d});
                }
        return out;
    }
    return out;
}

} // namespace

std::vector<AdmissibilityRow> weak_admissibility_report(const AveragingSequence& seq,
                                                        const std::vector<double>& t_grid,
                                                        const std::vector<double>& delta_grid,
                                                        int samples_per_axis) {
    if (t_grid.empty()) throw ConfigError("InvalidRegion", "empty t grid");
    std::vector<AdmissibilityRow> rows;
    for (double delta : delta_grid) {
        AdmissibilityRow row;
        row.delta = delta;
        for (double t : t_grid)
            row.beta = std::max(row.beta, seq.volume(t + delta) / seq.volume(t) - 1.0);

        if (delta <= 0) {
            rows.push_back(row);
            continue;
        }
        double step = delta / 8.0;
        double alpha = 0.0;
        bool found = false;
        for (int j = 0; j <= 40 && !found; ++j) {
            alpha = step * double(j);
            found = true;
            for (double t : t_grid) {
                auto gs = sample_set(seq, t, samples_per_axis);
                auto ss = sample_ball(seq, delta, samples_per_axis);
                for (auto& g : gs) {
                    for (auto& s : ss) {
                        auto prod = group_compose(seq.instance(), g, s);
                        if (!seq.member(prod, t + alpha)) { found = false; break; }
                    }
                    if (!found) break;
                }
                if (!found) break;
            }
        }
        row.alpha = found ? alpha : std::numeric_limits<double>::infinity();
        rows.push_back(row);
    }
    return rows;
}

} // namespace mset
