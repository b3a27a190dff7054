#pragma once

// Closed-form spectral constants and Pleijel-type bound calculators.

#include <optional>

namespace geoup::spectral {

/// λ1 of a regular hexagon times its area (numerically computed, externally sourced).
inline constexpr double kHexagonEigenvalueConstant = 18.5762;

/// Bourgain's improvement over Pleijel's constant (quoted only).
inline constexpr double kBourgainImprovement = 3e-9;

/// Bessel function of the first kind, orders 0 and 1, by power series.
double bessel_j0(double x);
double bessel_j1(double x);

/// First positive zero of J0, by Newton iteration from 2.4.
double bessel_j0_first_zero();

struct SpectralConstants {
    double bessel_j = 0.0;
    double pleijel_limit = 0.0;         // (2/j)²
    double hexagon_eig_const = kHexagonEigenvalueConstant;
    std::optional<double> stability_C;  // Faber–Krahn stability constant, user supplied

    static SpectralConstants compute(std::optional<double> stability_C = std::nullopt);
};

/// (2/j)².
double pleijel_limit();

/// π j² / area: first Dirichlet eigenvalue of the disk with the given area.
double lambda1_disk(double area);

/// Weyl asymptotics 4πn / area.
double weyl_eigenvalue(double n, double area);

/// 4π / 18.5762: nodal count ratio achieved by a hexagonal tiling.
double hexagonal_obstruction();

/// 1 + (1/250)(1 − inradius/equiv_radius)³.
double hansen_nadirashvili_factor(double inradius, double equiv_radius);

struct PleijelImprovement {
    double asymmetry_gain = 0.0;    // c³C / (216 + 6c²C), kept separately: it underflows 1 − gain
    double deviation_gain = 0.0;    // c/2
    double asymmetry_branch = 1.0;  // 1 − asymmetry_gain
    double deviation_branch = 1.0;  // 1 − deviation_gain
    /// The weaker of the two branches; N ≤ worst · (2/j)² n.
    double worst() const { return asymmetry_branch > deviation_branch ? asymmetry_branch : deviation_branch; }
    double smallest_gain() const { return asymmetry_gain < deviation_gain ? asymmetry_gain : deviation_gain; }
};

/// Improvement factors over Pleijel's constant for asymmetry-plus-deviation constant `c`
/// and stability constant `C`. `C` has no default.
PleijelImprovement improved_pleijel_factor(double c, double C);

/// ε0 = (2/j)² (1 − worst branch): the improvement in the nodal count ratio.
double pleijel_epsilon0(double c, double C);

/// k π j² / area, plus ε0 k / area when a strengthening ε0 is supplied.
double spectral_partition_bound(double k, double area, std::optional<double> epsilon0 = std::nullopt);

}  // namespace geoup::spectral
