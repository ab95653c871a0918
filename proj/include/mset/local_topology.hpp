#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mset/point_patch.hpp"
#include "mset/scheme.hpp"
#include "mset/window.hpp"

namespace mset {

// Comparison window K (compact axis box) together with the translation
// neighbourhood V = open ball of radius eps in the instance metric.
struct EntourageSpec {
    AxisBox K;
    double eps = 0;
};

// Hit set membership: does the patch meet the open box V?  The patch must
// be complete over a region containing V.
bool chabauty_hit(const PointPatch& patch, const AxisBox& v_open);
// Miss set membership: is the patch disjoint from the closed box K?
bool chabauty_miss(const PointPatch& patch, const AxisBox& k);

// Two-sided epsilon-inclusion of traces: every point of Q ∩ K lies within
// eps of a point of P and vice versa.  Both patches must be complete over
// K inflated by eps.
bool local_rubber_member(const PointPatch& q, const PointPatch& p, const AxisBox& k,
                         double eps);

struct EntourageDecision {
    bool yes = false;
    std::vector<double> witness_t; // translation with (t + Q) ∩ K = P ∩ K
};

// Decide whether some translation t with |t| < eps gives exact trace
// equality (t + Q) ∩ K = P ∩ K.  Finite candidate method: t ranges over
// p - q for p in P ∩ K and q in Q within eps of p, plus t = 0 when both
// traces are empty.  Set equality uses componentwise tolerance `tol`
// (near-exact, since candidate translations are differences of stored
// points).  Euclidean instances only.
EntourageDecision local_entourage_member(const PointPatch& p, const PointPatch& q,
                                         const AxisBox& k, double eps, double tol = 1e-9);

// Independent brute-force oracle: scan t over a grid of the eps-ball at
// the given resolution and compare traces with a tolerance matched to the
// grid spacing.  Used to validate the candidate method.
EntourageDecision entourage_oracle_grid(const PointPatch& p, const PointPatch& q,
                                        const AxisBox& k, double eps,
                                        double resolution = 1e-3);

struct FlcOrbitReport {
    int samples = 0;
    int successes = 0;
    double success_fraction = 0.0;
    double kprime_radius = 0.0;
    std::vector<std::vector<double>> failures; // sampled translations that failed
};

// Orbit-compactness style check: for sampled translations t (a seeded
// Kronecker low-discrepancy sequence over [0, t_range)^d), search for a
// small t' with (t + P0) ∩ K = (t' + P0) ∩ K.  Model sets are expected to
// succeed for every sample once kprime_radius is large enough.
FlcOrbitReport flc_orbit_criterion(const EuclideanScheme& scheme, const Window& window,
                                   const AxisBox& k, double kprime_radius, int n_samples,
                                   unsigned long long seed = 0, double t_range = 50.0,
                                   long long budget = 50'000'000);

// Same check against a fixed reference patch (used as a negative control
// with non-model point sets).  The patch must be complete over K inflated
// by t_range + kprime_radius.
FlcOrbitReport flc_orbit_criterion_patch(const PointPatch& base, const AxisBox& k,
                                         double kprime_radius, int n_samples,
                                         unsigned long long seed = 0, double t_range = 10.0);

} // namespace mset
