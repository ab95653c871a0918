#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mset/point_patch.hpp"
#include "mset/window.hpp"
#include "mset/zsqrt2.hpp"

namespace mset {

enum class ExactForm { None, ZSqrt2Ring };

// Euclidean cut-and-project scheme: physical space R^d, internal space
// R^m, and a full-rank lattice in R^{d+m} spanned by the columns of
// `basis`.  When the lattice is the quadratic-integer embedding of
// Z[sqrt2] (d = m = 1, generators (1,1) and (sqrt2,-sqrt2)), exact_form
// enables exact integer-pair arithmetic for membership and regularity
// decisions.
class EuclideanScheme {
public:
    EuclideanScheme(int d, int m, Eigen::MatrixXd basis,
                    ExactForm exact_form = ExactForm::None);

    // The canonical Z[sqrt2] scheme.
    static EuclideanScheme zsqrt2();

    int d() const { return d_; }
    int m() const { return m_; }
    int ambient_dim() const { return d_ + m_; }
    const Eigen::MatrixXd& basis() const { return basis_; }
    const Eigen::MatrixXd& basis_inverse() const { return basis_inv_; }
    ExactForm exact_form() const { return exact_form_; }
    bool exact() const { return exact_form_ == ExactForm::ZSqrt2Ring; }

    // |det(basis)|.
    double covolume() const { return covolume_; }

    std::vector<double> physical_part(const Eigen::VectorXd& v) const;
    std::vector<double> internal_part(const Eigen::VectorXd& v) const;

    // Lattice point for an integer coordinate vector.
    Eigen::VectorXd lattice_point(const std::vector<long long>& n) const;

    // Desk-scale evidence checks for the scheme axioms; reported, never
    // proofs.  Injectivity: no nonzero lattice vector with physical part
    // within `tol` of zero and internal part within `radius`.  Density:
    // internal projections of lattice points with physical part in
    // [-box_radius, box_radius]^d are eps-dense in the window.
    bool check_projection_injective(double radius, double tol = 1e-9) const;
    double internal_density_gap(const Window& window, double box_radius,
                                long long budget = 50'000'000) const;

private:
    int d_, m_;
    Eigen::MatrixXd basis_, basis_inv_;
    double covolume_;
    ExactForm exact_form_;
};

// All lattice points with physical part in `region` and internal part in
// `window`, as physical-space points.  Complete over the region: the
// integer search box is derived from interval bounds on basis^{-1}, so no
// lattice point is missed.  Throws RegionTooLarge when the search box
// exceeds `budget` candidates.
PointPatch enumerate_model_set(const EuclideanScheme& scheme, const Window& window,
                               const AxisBox& region, long long budget = 50'000'000);

// Raw lattice enumeration over a physical-region x internal-box target
// (no window semantics); used internally and by the torus periodization.
struct LatticeHit {
    std::vector<double> phys, internal;
    std::vector<long long> coords;
};
std::vector<LatticeHit> enumerate_lattice(const EuclideanScheme& scheme,
                                          const AxisBox& phys_box,
                                          const AxisBox& internal_box,
                                          long long budget = 50'000'000);

// Star map: the internal projection of the unique lattice point whose
// physical projection matches `phys` within `tol`.  The search considers
// lattice points with internal part bounded by `internal_bound`; the match
// is unique for tol < 1/(4 * internal_bound) in the exact scheme.
std::vector<double> star_map(const EuclideanScheme& scheme, const std::vector<double>& phys,
                             double internal_bound = 16.0, double tol = 1e-9);
// Exact variant for the Z[sqrt2] scheme.
ZSqrt2 star_map_exact(const EuclideanScheme& scheme, double phys,
                      double internal_bound = 16.0, double tol = 1e-9);

enum class RegularityVerdict { Regular, BoundaryHit, Inconclusive };

struct RegularityResult {
    RegularityVerdict verdict = RegularityVerdict::Inconclusive;
    // Lattice point realizing the closest approach to the window boundary.
    std::vector<double> witness_phys, witness_internal;
    double min_boundary_distance = std::numeric_limits<double>::infinity();
    bool exact = false; // verdict certified by exact arithmetic (searched range)
};

// Scan lattice points with physical part in [-search_radius, search_radius]^d
// for internal parts on (exact) or near (within tol of) the window
// boundary.  With the Z[sqrt2] exact form and a 1-d window the verdict is
// exact for the searched range; the float path reports Inconclusive when
// the closest approach lands in (tol, 10*tol].
RegularityResult check_gamma_regular(const EuclideanScheme& scheme, const Window& window,
                                     double search_radius, double tol = 1e-9,
                                     long long budget = 50'000'000);

// covol(lattice) / measure(window); throws ZeroMeasureWindow.
double model_set_covolume(const EuclideanScheme& scheme, const Window& window);
// Reciprocal of the model-set covolume: mean number of points per unit
// physical volume.
double predicted_density(const EuclideanScheme& scheme, const Window& window);

// Point of the torus (R^{d+m}) / lattice, reduced to the half-open
// fundamental parallelepiped of the basis (coordinates in [0,1)).
struct TorusPoint {
    Eigen::VectorXd reduced; // basis coordinates, in [0,1)
    Eigen::VectorXd ambient; // basis * reduced
};

TorusPoint torus_reduce(const EuclideanScheme& scheme, const Eigen::VectorXd& ambient);
// Parametrization of the translated model set g + P0: the class of (g, 0).
TorusPoint torus_parametrize(const EuclideanScheme& scheme, const std::vector<double>& g);

// Evaluate the lattice periodization of f ⊗ chi_window at the torus point
// y: sum of f(y_phys + gamma_G) over lattice points gamma with
// y_int + gamma_H in the window.  `f` is any callable supported in the
// closed box [center - radius, center + radius]^d; `cutoff` must cover
// that support box (else CutoffTooSmall).
template <class F>
double periodization_on_torus(const EuclideanScheme& scheme, const Window& window,
                              F&& f, const std::vector<double>& f_center, double f_radius,
                              const TorusPoint& y, double cutoff,
                              long long budget = 50'000'000);

// (implementation detail for the template above)
double periodization_on_torus_impl(const EuclideanScheme& scheme, const Window& window,
                                   const std::function<double(const std::vector<double>&)>& f,
                                   const std::vector<double>& f_center, double f_radius,
                                   const TorusPoint& y, double cutoff, long long budget);

template <class F>
double periodization_on_torus(const EuclideanScheme& scheme, const Window& window,
                              F&& f, const std::vector<double>& f_center, double f_radius,
                              const TorusPoint& y, double cutoff, long long budget) {
    return periodization_on_torus_impl(scheme, window,
                                       std::function<double(const std::vector<double>&)>(f),
                                       f_center, f_radius, y, cutoff, budget);
}

} // namespace mset
