#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mset/error.hpp"
#include "mset/point_pattern.hpp"
#include "mset/scheme.hpp"
#include "mset/window.hpp"

using namespace mset;

namespace {

const double S2 = std::sqrt(2.0);

PointPatch integer_lattice(double lo, double hi) {
    PointPatch p;
    p.kind = InstanceKind::Euclidean;
    p.dim = 1;
    p.region = AxisBox({lo}, {hi});
    for (long long n = (long long)std::ceil(lo); n <= (long long)std::floor(hi); ++n) {
        p.pts.push_back({double(n)});
        p.exact.push_back({ZSqrt2{n, 0}});
    }
    return p;
}

PointPatch zsqrt2_patch(double half_extent) {
    return enumerate_model_set(EuclideanScheme::zsqrt2(), Window::box({0.8}),
                               AxisBox::centered(1, half_extent));
}

} // namespace

TEST_CASE("min separation") {
    // gap structure of the [0,6] patch {0, 1+s2, 2+s2, 3+2s2}
    PointPatch patch = enumerate_model_set(EuclideanScheme::zsqrt2(), Window::box({0.8}),
                                           AxisBox({0.0}, {6.0}));
    CHECK(min_separation(patch) == doctest::Approx(1.0).epsilon(1e-12));

    PointPatch z = integer_lattice(0, 100);
    CHECK(min_separation(z) == doctest::Approx(1.0));
    CHECK(is_uniformly_discrete(z, 1.0));
    CHECK(!is_uniformly_discrete(z, 1.5));
    CHECK(is_uniformly_discrete(z, 0.0)); // any patch vs r = 0

    PointPatch single;
    single.kind = InstanceKind::Euclidean;
    single.dim = 1;
    single.pts = {{0.0}};
    CHECK_THROWS_AS(min_separation(single), ConfigError);
}

TEST_CASE("covering radius") {
    PointPatch z = integer_lattice(0, 100);
    CHECK(covering_radius(z, 2.0) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(is_relatively_dense(z, 0.6));

    // scanned oracle: the gaps of the zsqrt2/W=[-0.8,0.8] set take the
    // values {1, sqrt2, 1+sqrt2}; the largest gap over [-100,100] is
    // 1 + sqrt2, so the covering radius is (1+sqrt2)/2 ~ 1.20711
    PointPatch p = zsqrt2_patch(100.0);
    double cover = covering_radius(p, 5.0);
    CHECK(cover == doctest::Approx((1.0 + S2) / 2.0).epsilon(0.02));

    PointPatch empty;
    empty.kind = InstanceKind::Euclidean;
    empty.dim = 1;
    empty.region = AxisBox({0.0}, {1.0});
    CHECK_THROWS_AS(covering_radius(empty, 0.1), ConfigError);

    // margin exhausts the region
    CHECK_THROWS_AS(covering_radius(z, 60.0), ConfigError);
}

TEST_CASE("difference set") {
    PointPatch z = integer_lattice(-30, 30);
    PointPatch dz = difference_set(z, 2.5);
    REQUIRE(dz.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(dz.pts[i][0] == doctest::Approx(double(i - 2)));

    // brute-force oracle over the patch, radius 3
    PointPatch p = zsqrt2_patch(20.0);
    PointPatch diffs = difference_set(p, 3.0);
    std::vector<double> oracle;
    for (auto& x : p.pts)
        for (auto& y : p.pts) {
            double d = y[0] - x[0];
            if (std::abs(d) <= 3.0) oracle.push_back(d);
        }
    std::sort(oracle.begin(), oracle.end());
    oracle.erase(std::unique(oracle.begin(), oracle.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                 oracle.end());
    REQUIRE(diffs.size() == oracle.size());
    for (size_t i = 0; i < oracle.size(); ++i)
        CHECK(diffs.pts[i][0] == doctest::Approx(oracle[i]).epsilon(1e-12));

    // frozen: {0, ±1, ±sqrt2, ±(1+sqrt2)}
    REQUIRE(diffs.size() == 7);
    CHECK(diffs.pts[0][0] == doctest::Approx(-1.0 - S2));
    CHECK(diffs.pts[3][0] == doctest::Approx(0.0));
    CHECK(diffs.pts[6][0] == doctest::Approx(1.0 + S2));

    CHECK_THROWS_AS(difference_set(zsqrt2_patch(2.0), 3.0), ConfigError);
}

TEST_CASE("difference set lands in the doubled-window model set, exactly") {
    Window w = Window::box({0.8});
    PointPatch p = zsqrt2_patch(40.0);
    PointPatch diffs = difference_set(p, 10.0);
    REQUIRE(diffs.has_exact());
    Window doubled = w.difference_window();
    for (auto& e : diffs.exact) {
        // internal part must lie in W - W = [-1.6, 1.6]; decided exactly
        ZSqrt2 x = e[0];
        CHECK(compare_conj_to(x, -1.6) >= 0);
        CHECK(compare_conj_to(x, 1.6) <= 0);
        CHECK(doubled.contains({x.conj_value()}));
    }
}

TEST_CASE("flc evidence for model sets") {
    PointPatch p = zsqrt2_patch(40.0);
    FlcResult res = flc_check(p, 10.0);
    CHECK(res.evidence);
    CHECK(res.difference_count > 10);
    CHECK(res.min_difference_gap > 0.1);
}

TEST_CASE("flc violation for the accumulating counterexample") {
    PointPatch p;
    p.kind = InstanceKind::Euclidean;
    p.dim = 1;
    p.region = AxisBox({-2.0}, {2.0});
    for (int n = 1; n <= 1000; ++n) p.pts.push_back({1.0 / double(n)});
    p.canonicalize();
    FlcResult res = flc_check(p, 1.0);
    CHECK(!res.evidence);
    REQUIRE(res.witness.has_value());
    CHECK(euclid_dist(res.witness->first, res.witness->second) <= 1e-9);
}

TEST_CASE("difference-count growth separates model sets from scatter") {
    // deterministic pseudo-random scatter of 1000 points in [0,100]
    std::mt19937_64 rng(42);
    PointPatch scatter;
    scatter.kind = InstanceKind::Euclidean;
    scatter.dim = 1;
    scatter.region = AxisBox({0.0}, {100.0});
    for (int i = 0; i < 1000; ++i) scatter.pts.push_back({uniform01(rng) * 100.0});
    scatter.canonicalize();

    // scatter pair differences are almost all distinct, so the difference
    // count stays near the raw pair count; model-set differences collapse
    // onto a discrete set orders of magnitude smaller
    auto pair_count = [](const PointPatch& patch, double radius) {
        long long pairs = 0;
        for (auto& x : patch.pts)
            for (auto& y : patch.pts)
                pairs += std::abs(y[0] - x[0]) <= radius;
        return pairs;
    };
    FlcResult rs = flc_check(scatter, 8.0);
    double scatter_collapse = double(pair_count(scatter, 8.0)) / double(rs.difference_count);

    PointPatch p = zsqrt2_patch(60.0);
    FlcResult rm = flc_check(p, 8.0);
    double model_collapse = double(pair_count(p, 8.0)) / double(rm.difference_count);

    CHECK(scatter_collapse < 2.0);   // essentially no collapsing
    CHECK(model_collapse > 20.0);    // locally finite difference set
    CHECK(rs.difference_count > 20 * rm.difference_count);
}

TEST_CASE("local finiteness profile") {
    PointPatch z = integer_lattice(0, 100);
    auto prof = local_finiteness_profile(z, {1.0, 2.0, 0.5});
    // closed K of length 1 catches two integers
    CHECK(prof[0] == 2);
    CHECK(prof[1] == 3);
    CHECK(prof[2] == 1);

    PointPatch p = zsqrt2_patch(100.0);
    auto mp = local_finiteness_profile(p, {1.0});
    CHECK(mp[0] == 2);

    PointPatch empty;
    empty.kind = InstanceKind::Euclidean;
    empty.dim = 1;
    empty.region = AxisBox({0.0}, {1.0});
    CHECK(local_finiteness_profile(empty, {1.0})[0] == 0);
}

TEST_CASE("discreteness chain: flc evidence implies uniform discreteness and bounded counts") {
    PointPatch p = zsqrt2_patch(50.0);
    FlcResult flc = flc_check(p, 5.0);
    REQUIRE(flc.evidence);

    double sep = min_separation(p);
    CHECK(is_uniformly_discrete(p, sep / 2.0));

    // |P ∩ gK| <= vol(K) / vol(ball(sep/2)) + 1 for K a box of side L
    for (double L : {1.0, 3.0, 10.0}) {
        long long c = local_finiteness_profile(p, {L})[0];
        CHECK(double(c) <= L / sep + 1.0 + 1e-9);
    }
}

TEST_CASE("determinism: repeated runs bit-identical") {
    PointPatch p1 = zsqrt2_patch(30.0);
    PointPatch p2 = zsqrt2_patch(30.0);
    REQUIRE(p1.size() == p2.size());
    for (size_t i = 0; i < p1.size(); ++i) CHECK(p1.pts[i][0] == p2.pts[i][0]);
    PointPatch d1 = difference_set(p1, 4.0);
    PointPatch d2 = difference_set(p2, 4.0);
    REQUIRE(d1.size() == d2.size());
    for (size_t i = 0; i < d1.size(); ++i) CHECK(d1.pts[i][0] == d2.pts[i][0]);
}

TEST_CASE("group difference and metric sanity for the instances") {
    // Heisenberg quasi-norm and group ops
    std::vector<double> g{1.0, 2.0, 3.0}, h{-0.5, 1.0, 0.25};
    auto prod = group_compose(InstanceKind::Heisenberg, g, h);
    CHECK(prod[0] == doctest::Approx(0.5));
    CHECK(prod[1] == doctest::Approx(3.0));
    CHECK(prod[2] == doctest::Approx(3.25 + 1.0 * 1.0));
    auto inv = group_inverse(InstanceKind::Heisenberg, g);
    auto e = group_compose(InstanceKind::Heisenberg, g, inv);
    CHECK(euclid_norm(e) < 1e-12);
    CHECK(identity_distance(InstanceKind::Heisenberg, {0.1, -0.2, 0.04}) ==
          doctest::Approx(0.2));

    // SL2
    std::vector<double> a{2.0, 1.0, 3.0, 2.0}; // det 1
    auto ainv = group_inverse(InstanceKind::SL2, a);
    auto id = group_compose(InstanceKind::SL2, a, ainv);
    CHECK(id[0] == doctest::Approx(1.0));
    CHECK(id[1] == doctest::Approx(0.0));
    CHECK(id[2] == doctest::Approx(0.0));
    CHECK(id[3] == doctest::Approx(1.0));
}
