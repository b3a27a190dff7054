#pragma once

// Fraenkel asymmetry and its generalization to convex reference bodies.

#include "geoup/geometry.hpp"

#include <cstddef>
#include <string>

namespace geoup {

struct AsymmetryOptions {
    std::size_t grid = 5;                  // k×k start grid over the bounding box
    std::size_t max_starts = 64;           // starts that receive a local refinement
    std::size_t evaluations_per_start = 500;
    std::size_t angle_starts = 8;          // rotation starts for the generalized problem
    double tolerance = 1e-6;               // convergence, relative to the region diameter
};

struct AsymmetryResult {
    double value = 0.0;   // |r △ B| / |r|, in [0, 2]
    Disk disk{{0.0, 0.0}, 1.0};
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Upper bound on 𝒜(r) = inf_B |r △ B| / |r| over disks with |B| = |r|,
/// from multistart simplex search over the disk center.
AsymmetryResult fraenkel_asymmetry(const Region& r, const AsymmetryOptions& opts = {});

/// Normalized asymmetry objective at a given center (exposed for oracles and tests).
double fraenkel_objective(const Region& r, Point center);

/// Unit-area convex reference body centered at its centroid.
class BodyTemplate {
public:
    BodyTemplate(const Region& shape, std::string name);

    const SimplePolygon& shape() const { return shape_; }
    const std::string& name() const { return name_; }
    /// Largest m (up to `max_order`) such that rotation by 2π/m maps the body onto itself.
    std::size_t symmetry_order() const { return symmetry_order_; }
    /// Copy scaled to `area`, rotated by `angle`, centered at `center`.
    SimplePolygon placed(Point center, double angle, double area) const;

    static constexpr std::size_t max_order = 64;

private:
    SimplePolygon shape_;
    std::string name_;
    std::size_t symmetry_order_ = 1;
};

struct GeneralizedAsymmetryResult {
    double value = 0.0;
    Point center;
    double angle = 0.0;  // in [0, 2π/m)
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Normalized objective |r △ (R_angle K_s + center)| / |r|.
double generalized_objective(const Region& r, const BodyTemplate& k, Point center, double angle);

/// Multistart search over center and rotation for 𝒜_K(r).
GeneralizedAsymmetryResult generalized_asymmetry(const Region& r, const BodyTemplate& k,
                                                 const AsymmetryOptions& opts = {});

}  // namespace geoup
