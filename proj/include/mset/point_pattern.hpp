#pragma once

#include <optional>
#include <vector>

#include "mset/point_patch.hpp"

namespace mset {

// Smallest pairwise distance in the instance metric (d(e, x^{-1}y) for
// the group instances).  Throws TooFewPoints below two points.
double min_separation(const PointPatch& patch);
bool is_uniformly_discrete(const PointPatch& patch, double r);

// Covering-radius estimate by a deterministic grid scan of the region
// interior, excluding a boundary margin to avoid edge effects.
// resolution <= 0 selects the default min_separation / 4.
double covering_radius(const PointPatch& patch, double margin, double resolution = 0.0);
bool is_relatively_dense(const PointPatch& patch, double R);

// All group differences x^{-1}y with identity-distance at most `radius`,
// deduplicated and canonically sorted.  Requires the patch region to span
// at least 2*radius per axis (MarginTooSmall otherwise).
PointPatch difference_set(const PointPatch& patch, double radius);

struct FlcResult {
    bool evidence = false;
    long long difference_count = 0;
    double min_difference_gap = 0.0; // smallest distance between distinct differences
    // Present on violation: the two distinct difference values that
    // collide within the separation tolerance.
    std::optional<std::pair<std::vector<double>, std::vector<double>>> witness;
};

// Finite-local-complexity evidence: the difference set within `radius`
// must be finite and separated (no two distinct elements within sep_tol).
// Patches carrying exact coordinates are decided in exact arithmetic.
FlcResult flc_check(const PointPatch& patch, double radius, double sep_tol = 1e-9);

// sup over translates gK of |P ∩ gK| for axis boxes K of the given side
// lengths (exact sliding-window maximum for d = 1, grid scan otherwise).
std::vector<long long> local_finiteness_profile(const PointPatch& patch,
                                                const std::vector<double>& box_sides);

} // namespace mset
