#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mset/autocorrelation.hpp"
#include "mset/error.hpp"
#include "mset/heisenberg.hpp"

using namespace mset;

namespace {

const double S2 = std::sqrt(2.0);

EuclideanScheme scheme() { return EuclideanScheme::zsqrt2(); }
Window window() { return Window::box({0.8}); }

} // namespace

TEST_CASE("theoretical atoms: identity weight equals the density") {
    AtomicMeasure m = theoretical_autocorrelation(scheme(), window(), 0.0);
    REQUIRE(m.atoms.size() == 1);
    CHECK(m.atoms[0].loc[0] == 0.0);
    CHECK(m.atoms[0].weight == doctest::Approx(predicted_density(scheme(), window())).epsilon(1e-13));
    CHECK(m.atoms[0].weight == doctest::Approx(1.6 / (2.0 * S2)).epsilon(1e-13));
}

TEST_CASE("theoretical atoms: interval-overlap weights") {
    AtomicMeasure m = theoretical_autocorrelation(scheme(), window(), 3.0);
    // oracle: weight at z is max(0, 1.6 - |star(z)|) / (2 sqrt2)
    for (auto& atom : m.atoms) {
        double star = star_map(scheme(), {atom.loc[0]}, 2.0)[0];
        double expect = std::max(0.0, 1.6 - std::abs(star)) / (2.0 * S2);
        CHECK(atom.weight == doctest::Approx(expect).epsilon(1e-12));
    }
    // frozen: atom at 1 + sqrt2 has weight (1.6 - (sqrt2 - 1)) / (2 sqrt2)
    auto it = std::find_if(m.atoms.begin(), m.atoms.end(),
                           [](const auto& a) { return std::abs(a.loc[0] - 1.0 - S2) < 1e-9; });
    REQUIRE(it != m.atoms.end());
    CHECK(it->weight == doctest::Approx((1.6 - (S2 - 1.0)) / (2.0 * S2)).epsilon(1e-12));
    CHECK(it->weight == doctest::Approx(0.41924).epsilon(1e-4));

    // star magnitude >= 1.6 never yields an atom: z = 2 has star 2
    for (auto& atom : m.atoms) CHECK(std::abs(atom.loc[0] - 2.0) > 1e-9);
}

TEST_CASE("theoretical atoms: symmetry, bounds, truncation consistency") {
    AtomicMeasure m = theoretical_autocorrelation(scheme(), window(), 12.0);
    double density = predicted_density(scheme(), window());
    for (auto& atom : m.atoms) {
        CHECK(atom.weight > 0.0);
        CHECK(atom.weight <= density + 1e-13);
        // mirror atom with identical weight
        bool found = false;
        for (auto& other : m.atoms)
            if (std::abs(other.loc[0] + atom.loc[0]) < 1e-9) {
                CHECK(other.weight == doctest::Approx(atom.weight).epsilon(1e-13));
                found = true;
            }
        CHECK(found);
    }

    AtomicMeasure small = theoretical_autocorrelation(scheme(), window(), 6.0);
    for (auto& atom : small.atoms) {
        auto it = std::find_if(m.atoms.begin(), m.atoms.end(), [&](const auto& a) {
            return std::abs(a.loc[0] - atom.loc[0]) < 1e-12;
        });
        REQUIRE(it != m.atoms.end());
        CHECK(it->weight == atom.weight); // bit-identical under cutoff growth
    }
}

TEST_CASE("sigma trace basics") {
    // tent at the origin of width 0.4: only self-pairs contribute (the
    // minimal separation is 1), so sigma approaches the density
    TestFunction f = TestFunction::tent({0.0}, 0.4);
    SigmaTrace tr = sigma_trace(scheme(), window(), f, {200.0, 400.0, 800.0});
    REQUIRE(tr.sigma.size() == 3);
    for (double s : tr.sigma)
        CHECK(s == doctest::Approx(predicted_density(scheme(), window())).epsilon(0.02));
    // counts nondecreasing, volumes increasing
    CHECK(tr.count[0] <= tr.count[1]);
    CHECK(tr.count[1] <= tr.count[2]);
    CHECK(tr.volume[0] < tr.volume[1]);

    // single-entry grid
    SigmaTrace one = sigma_trace(scheme(), window(), f, {50.0});
    CHECK(one.sigma.size() == 1);

    CHECK_THROWS_AS(sigma_trace(scheme(), window(), f, {}), ConfigError);
    CHECK_THROWS_AS(sigma_trace(scheme(), window(), f, {3.0, 2.0}), ConfigError);
}

TEST_CASE("sigma matches the theoretical weight at a shifted atom") {
    // tent isolating the atom at 1 + sqrt2
    TestFunction f = TestFunction::tent({1.0 + S2}, 0.4);
    SigmaTrace tr = sigma_trace(scheme(), window(), f, {2000.0});
    AtomicMeasure m = theoretical_autocorrelation(scheme(), window(), 4.0);
    double expect = measure_apply(m, f);
    CHECK(expect == doctest::Approx((1.6 - (S2 - 1.0)) / (2.0 * S2)).epsilon(1e-9));
    CHECK(tr.sigma.back() == doctest::Approx(expect).epsilon(0.05));
}

TEST_CASE("sigma of a gap-centered function vanishes") {
    // midpoint of the atom gap (sqrt2, 1+sqrt2); the nearest differences
    // sit 0.5 away, so a width-0.4 tent sees nothing
    double mid = (S2 + 1.0 + S2) / 2.0;
    AtomicMeasure m = theoretical_autocorrelation(scheme(), window(), 6.0);
    for (auto& atom : m.atoms) CHECK(std::abs(atom.loc[0] - mid) >= 0.5 - 1e-9);
    TestFunction f = TestFunction::tent({mid}, 0.4);
    SigmaTrace tr = sigma_trace(scheme(), window(), f, {500.0});
    CHECK(tr.sigma.back() == 0.0);
}

TEST_CASE("gram positivity") {
    AtomicMeasure m = theoretical_autocorrelation(scheme(), window(), 6.0);

    // single tent against the identity atom only: M11 = density |f|_2^2,
    // and |tent|_2^2 = 2 w / 3 in closed form
    AtomicMeasure only_identity;
    only_identity.cutoff = 0.0;
    only_identity.atoms.push_back({{0.0}, predicted_density(scheme(), window())});
    TestFunction f0 = TestFunction::tent({0.0}, 0.3);
    GramReport single = positive_definiteness_gram(only_identity, {f0});
    CHECK(single.gram(0, 0) ==
          doctest::Approx(predicted_density(scheme(), window()) * 2.0 * 0.3 / 3.0).epsilon(1e-9));
    CHECK(single.positive);

    // eight tents spread across the atom range
    std::vector<TestFunction> fs;
    for (double c : {0.0, 1.0, -1.0, S2, -S2, 1.0 + S2, -1.0 - S2, 2.0 + S2})
        fs.push_back(TestFunction::tent({c}, 0.3));
    GramReport rep = positive_definiteness_gram(m, fs);
    CHECK(rep.positive);
    CHECK(rep.min_eigenvalue >= -1e-8 * rep.trace);
    CHECK(rep.trace > 0.0);

    // negative control: corrupt one weight
    AtomicMeasure bad = m;
    for (auto& atom : bad.atoms)
        if (std::abs(atom.loc[0]) < 1e-12) atom.weight = -atom.weight;
    GramReport flagged = positive_definiteness_gram(bad, fs);
    CHECK(!flagged.positive);
    CHECK(flagged.min_eigenvalue < 0.0);
}

TEST_CASE("hof consistency: sigma against the measure for several tents") {
    AtomicMeasure m = theoretical_autocorrelation(scheme(), window(), 6.0);
    for (double c : {0.0, 1.0, S2, 1.0 + S2, 2.0 + S2}) {
        TestFunction f = TestFunction::tent({c}, 0.35);
        SigmaTrace tr = sigma_trace(scheme(), window(), f, {1500.0});
        double expect = measure_apply(m, f);
        CHECK(tr.sigma.back() == doctest::Approx(expect).epsilon(0.05));
    }
}

TEST_CASE("density bound trace") {
    // euclidean: ratio approaches the density and stabilizes
    std::vector<double> grid;
    for (double t = 100.0; t <= 1000.0; t += 100.0) grid.push_back(t);
    BoundTrace bt = density_bound_trace_euclidean(scheme(), window(), grid);
    CHECK(bt.top_half_max_over_min <= 1.1);
    CHECK(bt.sup_ratio < 1.0);
    CHECK(bt.ratio.back() == doctest::Approx(predicted_density(scheme(), window())).epsilon(0.02));

    // integer lattice through half-integer t: ratio exactly (t+0.5-ish)
    std::vector<double> tg = {10.5, 20.5, 40.5};
    std::vector<long long> counts = {21, 41, 81};
    std::vector<double> vols = {21.0, 41.0, 81.0};
    BoundTrace zb = density_bound_trace(tg, counts, vols);
    for (double r : zb.ratio) CHECK(r == doctest::Approx(1.0));

    // heisenberg instance stabilizes near the product density
    HeisWindow hw;
    std::vector<double> hgrid;
    for (double t = 20.0; t <= 120.0; t += 10.0) hgrid.push_back(t);
    auto counts_h = heis_counts(hw, hgrid);
    std::vector<double> vols_h;
    for (double t : hgrid) vols_h.push_back(heis_box_volume(t));
    BoundTrace hb = density_bound_trace(hgrid, counts_h, vols_h);
    CHECK(hb.ratio.back() == doctest::Approx(heis_predicted_density(hw)).epsilon(0.05));
    CHECK(hb.top_half_max_over_min <= 1.1);
}

TEST_CASE("sl2 sigma ratio") {
    TestFunction at_identity = TestFunction::trunc_gauss({1.0, 0.0, 0.0, 1.0}, 0.6,
                                                         InstanceKind::SL2);
    std::vector<double> grid = {2.0, 2.5, 3.0, 3.5, 4.0};

    // f1 = f2 gives ratio identically 1
    RatioTrace same = sl2_sigma_ratio(at_identity, at_identity, grid, 1.3, 12);
    for (double r : same.ratio) CHECK(r == doctest::Approx(1.0).epsilon(1e-12));

    // f1 at the unipotent (1,1;0,1), a known lattice difference
    TestFunction at_unipotent =
        TestFunction::trunc_gauss({1.0, 1.0, 0.0, 1.0}, 0.6, InstanceKind::SL2);
    RatioTrace rt = sl2_sigma_ratio(at_unipotent, at_identity, grid, 1.3, 12);
    CHECK(rt.sigma2.back() > 0.0);
    CHECK(rt.ratio.back() > 0.0);

    // gap-centered f1: (1, 0.7; 0, 1) sits 0.28 away from the nearest
    // realized difference (enumeration scan), so a width-0.2 bump sees
    // nothing and the ratio is identically 0
    TestFunction in_gap =
        TestFunction::trunc_gauss({1.0, 0.7, 0.0, 1.0}, 0.2, InstanceKind::SL2);
    RatioTrace zero = sl2_sigma_ratio(in_gap, at_identity, grid, 1.3, 12);
    for (double r : zero.ratio) CHECK(r == 0.0);
}

TEST_CASE("correlate quadrature") {
    // tent self-correlation at zero shift: integral of (1 - |u|/w)^2
    TestFunction f = TestFunction::tent({0.0}, 0.5);
    CHECK(correlate(f, f, 0.0) == doctest::Approx(2.0 * 0.5 / 3.0).epsilon(1e-10));
    // disjoint supports
    CHECK(correlate(f, f, 1.5) == 0.0);
    // symmetry in the shift for equal functions
    CHECK(correlate(f, f, 0.3) == doctest::Approx(correlate(f, f, -0.3)).epsilon(1e-10));
}
