#pragma once

// The two-dimensional inequality chain for the uncertainty constant, as
// executable arithmetic: each named bound, the final packing inequality
// against Blind's density π/√12, and a search for certifiable constants.

#include "geoup/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geoup::certificate {

/// π/√12, the packing density ceiling for disks with radii ratio ≥ 3/4 (trusted).
double blind_density();

struct ProofParams {
    double c1 = 1.0 / 250.0;  // "big" threshold: |Ω_i| ≥ (1+c1) min area
    double c2 = 7.0 / 250.0;  // strong overlap: |x_i − x_j| ≤ (1−c2)(r_i + r_j)
    double d1 = 0.0;          // asymmetry budget
    double d2 = 0.0;          // deviation budget

    /// c1 > 0, 0 < c2 ≤ 0.05, d1, d2 ≥ 0, all finite.
    void validate() const;
};

/// d2/c1 + d2: measure bound on the union of big cells.
double big_set_bound(double c1, double d2);

/// (√(1+c1) + δ)²/(1+c1): area growth of a radius-√(1+c1) disk under a
/// δ-dilation (lengths in units of η0). δ = 2 gives the factor bounded by 9.
double neighborhood_amplification(double c1, double dilation = 2.0);

struct LensCheck {
    double lens_value = 0.0;   // 2 arccos(1−c2) − 2√((2−c2)(1−c2)² c2)
    double bound_value = 0.0;  // 3.7 c2^{3/2}
    bool holds = false;
};

/// Lens area of two unit disks at distance 2(1−c2) versus 3.7 c2^{3/2}; c2 ∈ (0, 0.05].
LensCheck lens_lower_bound_check(double c2);

/// (20π/37)(1+c1)/c2^{3/2} · d1: measure bound on strongly overlapping small disks.
double small_overlap_bound(double c1, double c2, double d1);

/// Area of the δ-neighbourhood of two externally tangent unit disks, over 2π.
/// For δ = 2 this is 9/2 + 2√2/π + (9/π) arcsin(1/3).
double pair_dilation_ratio(double dilation);

/// 9/2 + 2√2/π + (9/π) arcsin(1/3) ≈ 6.3739.
double pair_neighborhood_factor();

/// Rational cap on the pair factor used in the final inequality.
inline constexpr double kPairFactorCap = 32.0 / 5.0;

/// (1−c2)² [1 − (9 d2/c1 + 9 d2 + (128π/37)(1+c1)/c2^{3/2} d1)].
double final_inequality_lhs(const ProofParams& p);

struct CertificateReport {
    ProofParams params;
    double big_set_bound = 0.0;
    double neighborhood_bound = 0.0;       // 9 d2/c1 + 9 d2
    double overlap_bound = 0.0;            // (20π/37)(1+c1)/c2^{3/2} d1
    double pair_neighborhood_bound = 0.0;  // (128π/37)(1+c1)/c2^{3/2} d1
    double lhs = 0.0;
    double blind_density = 0.0;
    double margin = 0.0;                   // lhs − π/√12
    bool contradiction = false;            // margin > 0
};

/// Evaluates every intermediate bound at the given parameters.
CertificateReport evaluate_chain(const ProofParams& p);

/// Worst split of c = d1 + d2: by linearity of the left-hand side in
/// (d1, d2) the minimum sits at a vertex, (c, 0) or (0, c).
ProofParams worst_split(double c1, double c2, double c);

/// Coefficients of d1 and d2 inside the bracket of the final inequality.
struct Coefficients {
    double k_asymmetry = 0.0;  // (128π/37)(1+c1)/c2^{3/2}
    double k_deviation = 0.0;  // 9/c1 + 9
};
Coefficients coefficients(double c1, double c2);

struct CertifiedConstant {
    double c_max = 0.0;
    double worst_d1 = 0.0;
    double worst_d2 = 0.0;
    std::string diagnostic;  // non-empty when c_max = 0
};

/// Largest c for which every split d1 + d2 = c keeps the left-hand side
/// above π/√12: c_max = (1 − (π/√12)/(1−c2)²) / max(K1, K2).
/// Requires the lens bound at c2 and the factor-9 amplification at c1.
CertifiedConstant certify_constant(double c1, double c2);

/// Same closed form with explicit coefficients (for monotonicity studies).
double certify_from_coefficients(double c2, const Coefficients& k);

/// Variant with a general dilation radius δ (units of η0), replacing the
/// factor 9 by sup_{c1≥0} of the amplification, (1+δ)², and the pair cap
/// 32/5 by the exact pair ratio at δ. Exploratory only for δ < 2.
double certify_constant_with_dilation(double c1, double c2, double dilation);

/// Minimum of the left-hand side over `points` equispaced splits of c.
double sweep_min_lhs(double c1, double c2, double c, std::size_t points = 1000);

struct SearchGrid {
    std::vector<double> c1_values;
    std::vector<double> c2_values;

    /// Log-spaced c1 ∈ [1e-4, 1] and linear c2 ∈ (0, 0.05], 60 points each.
    static SearchGrid default_grid();
};

struct OptimizedParameters {
    double c1 = 0.0;
    double c2 = 0.0;
    double c = 0.0;
    double grid_best = 0.0;  // incumbent before local refinement
};

/// Grid search followed by simplex refinement inside the admissible box.
/// Grid ties resolve to the lexicographically smallest (c1, c2).
OptimizedParameters optimize_parameters(const SearchGrid& grid = SearchGrid::default_grid());

/// Multiplies every radius by (1 − c2), keeping centers. Requires
/// |x_i − x_j| ≥ (1 − c2)(r_i + r_j) for every pair.
std::vector<Disk> shrink_disks(std::span<const Disk> disks, double c2);

}  // namespace geoup::certificate
