#pragma once

#include <vector>

#include "mset/point_patch.hpp"

namespace mset {

// Growing family (F_t) of compact symmetric sets, one per instance:
//   Box: F_t = [-t, t]^d in R^d, Haar = Lebesgue.
//   HeisBox: F_t = {|x| <= t, |y| <= t, |z| <= t^2}, Haar = dx dy dz.
//   HypBall: F_t = {g in SL2(R) : d(i, g.i) <= t}, volume normalized to
//   the hyperbolic disc area 4 pi sinh^2(t/2).
struct AveragingSequence {
    enum class Family { Box, HeisBox, HypBall };

    Family family = Family::Box;
    int d = 1; // Box only

    static AveragingSequence box(int dim) { return {Family::Box, dim}; }
    static AveragingSequence heis_box() { return {Family::HeisBox, 3}; }
    static AveragingSequence hyp_ball() { return {Family::HypBall, 4}; }

    double volume(double t) const;
    bool member(const std::vector<double>& g, double t) const;
    InstanceKind instance() const;
};

struct AdmissibilityRow {
    double delta = 0;
    double alpha = 0; // smallest grid alpha with (F_t)_delta inside F_{t+alpha}
    double beta = 0;  // max over the grid of vol(F_{t+delta}) / vol(F_t) - 1
};

// Empirical weak-admissibility table.  For each delta, products g*s are
// sampled with g on a deterministic lattice near the boundary of F_t and
// s on a lattice of the delta-ball; alpha is the smallest candidate such
// that every sampled product lands in F_{t+alpha}.
std::vector<AdmissibilityRow> weak_admissibility_report(const AveragingSequence& seq,
                                                        const std::vector<double>& t_grid,
                                                        const std::vector<double>& delta_grid,
                                                        int samples_per_axis = 6);

} // namespace mset
