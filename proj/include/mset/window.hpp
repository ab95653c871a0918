#pragma once

#include <utility>
#include <vector>

#include "mset/geometry.hpp"

namespace mset {

// Compact window in internal space.  The three supported geometry classes
// (axis box, Euclidean ball, finite union of disjoint intervals for m = 1)
// are compact with dense interior and Jordan-measurable boundary by
// construction, and all of measure, boundary distance and self-overlap
// volume are computable in closed form — which the autocorrelation module
// relies on.
class Window {
public:
    enum class Kind { Box, Ball, Intervals };

    // Axis box: center c (defaults to the origin) and per-axis half-widths.
    // A negative half-width denotes the empty window.
    static Window box(std::vector<double> half_widths,
                      std::vector<double> center = {});
    static Window ball(std::vector<double> center, double radius);
    // m = 1 only; intervals are sorted and must be pairwise disjoint.
    static Window intervals(std::vector<std::pair<double, double>> ivs);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool is_empty() const;

    double measure() const;
    bool contains(const std::vector<double>& p) const;
    // Distance from p to the topological boundary of the window (>= 0 on
    // both sides).
    double boundary_distance(const std::vector<double>& p) const;
    AxisBox bounding_box() const;

    // Lebesgue measure of W ∩ (W - shift).
    double overlap_measure(const std::vector<double>& shift) const;
    // Support of shift -> overlap_measure(shift), i.e. W + (-W).
    Window difference_window() const;
    Window translated(const std::vector<double>& t) const;

    // Boundary point coordinates along axis i (interval endpoints for the
    // 1-d geometries); used by the exact regularity check.
    std::vector<double> boundary_values_1d() const;

    // Triviality of the translation stabilizer {h : h + W = W}.  A
    // nonzero translation cannot fix a nonempty compact subset of R^m
    // (it would move the extreme point in its direction), so this holds
    // for every supported geometry with positive measure.
    bool translation_stabilizer_trivial() const { return !is_empty(); }

    const std::vector<double>& half_widths() const { return half_widths_; }
    const std::vector<double>& center() const { return center_; }
    double radius() const { return radius_; }
    const std::vector<std::pair<double, double>>& interval_list() const { return intervals_; }

private:
    Window() = default;

    Kind kind_ = Kind::Box;
    int dim_ = 0;
    std::vector<double> half_widths_;
    std::vector<double> center_;
    double radius_ = 0;
    std::vector<std::pair<double, double>> intervals_;
};

// Volume of the unit m-ball.
double unit_ball_volume(int m);

} // namespace mset
