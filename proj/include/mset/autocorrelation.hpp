#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mset/averaging.hpp"
#include "mset/scheme.hpp"
#include "mset/sl2.hpp"
#include "mset/test_function.hpp"
#include "mset/window.hpp"

namespace mset {

// Averaged correlation sums over a growing family (F_t): for each grid t,
//   sigma = (1 / vol(F_t)) * sum over x in P0 ∩ F_t, y in P0 with
//           x^{-1} y in supp(f) of f(x^{-1} y).
// The inner sum ranges over all of P0 (enumerated with a support-width
// margin beyond F_{t_max}), which avoids boundary corrections.
struct SigmaTrace {
    std::vector<double> t;
    std::vector<long long> count;  // |P0 ∩ F_t|
    std::vector<double> volume;    // vol(F_t)
    std::vector<double> sigma;
};

SigmaTrace sigma_trace(const EuclideanScheme& scheme, const Window& window,
                       const TestFunction& f, const std::vector<double>& t_grid,
                       long long budget = 50'000'000);

// Pure-point auto-correlation of an abelian model set within a cutoff:
// an atom at each lattice projection z with weight
//   w(z) = vol(W ∩ (W - star(z))) / covol(lattice),
// the closed form obtained by unfolding the periodization L2 norm over
// the lattice.  Gated by the empirical sigma trace in the test suite
// before being trusted anywhere else.
struct AtomicMeasure {
    struct Atom {
        std::vector<double> loc;
        double weight = 0;
    };
    std::vector<Atom> atoms; // sorted by location
    double cutoff = 0;
};

AtomicMeasure theoretical_autocorrelation(const EuclideanScheme& scheme, const Window& window,
                                          double cutoff, long long budget = 50'000'000);

// eta(f) = sum of w(z) f(z) over the atoms.
double measure_apply(const AtomicMeasure& measure, const TestFunction& f);

struct GramReport {
    Eigen::MatrixXd gram;
    double min_eigenvalue = 0;
    double trace = 0;
    bool positive = false; // min eig >= -1e-8 * trace
};

// Gram matrix M_ij = sum over atoms of w(z) (f_i^* * f_j)(z); positive
// semidefinite for a positive-definite measure.
GramReport positive_definiteness_gram(const AtomicMeasure& measure,
                                      const std::vector<TestFunction>& functions,
                                      double quad_tol = 1e-10);

// Point-count to volume ratios |P0 ∩ F_t| / vol(F_t) with the running sup
// and a stabilization statistic (max/min over the top half of the grid).
struct BoundTrace {
    std::vector<double> t;
    std::vector<long long> count;
    std::vector<double> volume;
    std::vector<double> ratio;
    double sup_ratio = 0;
    double top_half_max_over_min = 0;
};

BoundTrace density_bound_trace(const std::vector<double>& t_grid,
                               const std::vector<long long>& counts,
                               const std::vector<double>& volumes);

// Convenience: Euclidean box family ratios for a scheme.
BoundTrace density_bound_trace_euclidean(const EuclideanScheme& scheme, const Window& window,
                                         const std::vector<double>& t_grid,
                                         long long budget = 50'000'000);

// Haar-normalization-free ratio sigma_t(f1) / sigma_t(f2) for the SL2
// instance over the hyperbolic-ball family.  f2 should have mass near the
// identity so the denominator stays away from zero.
struct RatioTrace {
    std::vector<double> t;
    std::vector<double> sigma1, sigma2, ratio;
    long long points_enumerated = 0;
};

RatioTrace sl2_sigma_ratio(const TestFunction& f1, const TestFunction& f2,
                           const std::vector<double>& t_grid, double rho, int entry_bound,
                           long long budget = 200'000'000);

} // namespace mset
