#include "geoup/spectral.hpp"

#include "geoup/geometry.hpp"

#include <cmath>
#include <numbers>

namespace geoup::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

// Σ_k (−1)^k (x/2)^{2k+ν} / (k! (k+ν)!) for ν ∈ {0, 1}; accurate for |x| ≲ 10.
double bessel_series(int nu, double x) {
    const double h = 0.5 * x;
    const double q = -h * h;
    double term = nu == 0 ? 1.0 : h;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k + nu));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

double bessel_j0(double x) { return bessel_series(0, x); }
double bessel_j1(double x) { return bessel_series(1, x); }

double bessel_j0_first_zero() {
    static const double zero = [] {
        double x = 2.4;
        for (int i = 0; i < 50; ++i) {
            // J0' = −J1.
            const double step = bessel_j0(x) / (-bessel_j1(x));
            x -= step;
            if (std::abs(step) < 1e-16 * x) break;
        }
        return x;
    }();
    return zero;
}

SpectralConstants SpectralConstants::compute(std::optional<double> stability_C) {
    if (stability_C && !(*stability_C > 0.0)) throw ValidationError("stability constant C must be positive");
    SpectralConstants s;
    s.bessel_j = bessel_j0_first_zero();
    s.pleijel_limit = spectral::pleijel_limit();
    s.stability_C = stability_C;
    return s;
}

double pleijel_limit() {
    const double r = 2.0 / bessel_j0_first_zero();
    return r * r;
}

double lambda1_disk(double area) {
    if (!(area > 0.0)) throw ValidationError("lambda1_disk: area must be positive");
    const double j = bessel_j0_first_zero();
    return kPi * j * j / area;
}

double weyl_eigenvalue(double n, double area) {
    if (!(n >= 1.0)) throw ValidationError("weyl_eigenvalue: index must be at least 1");
    if (!(area > 0.0)) throw ValidationError("weyl_eigenvalue: area must be positive");
    return 4.0 * kPi * n / area;
}

double hexagonal_obstruction() { return 4.0 * kPi / kHexagonEigenvalueConstant; }

double hansen_nadirashvili_factor(double inradius, double equiv_radius) {
    if (!(inradius > 0.0) || !(equiv_radius > 0.0)) throw ValidationError("radii must be positive");
    if (inradius > equiv_radius) throw ValidationError("inradius cannot exceed the equal-area radius");
    const double t = 1.0 - inradius / equiv_radius;
    return 1.0 + t * t * t / 250.0;
}

PleijelImprovement improved_pleijel_factor(double c, double C) {
    if (!(c > 0.0 && c <= 2.0)) throw ValidationError("c must lie in (0, 2]");
    if (!(C > 0.0)) throw ValidationError("stability constant C must be positive");
    PleijelImprovement f;
    f.asymmetry_gain = c * c * c * C / (216.0 + 6.0 * c * c * C);
    f.deviation_gain = c / 2.0;
    f.asymmetry_branch = 1.0 - f.asymmetry_gain;
    f.deviation_branch = 1.0 - f.deviation_gain;
    return f;
}

double pleijel_epsilon0(double c, double C) {
    return pleijel_limit() * improved_pleijel_factor(c, C).smallest_gain();
}

double spectral_partition_bound(double k, double area, std::optional<double> epsilon0) {
    if (!(k >= 1.0)) throw ValidationError("spectral_partition_bound: k must be at least 1");
    if (!(area > 0.0)) throw ValidationError("spectral_partition_bound: area must be positive");
    if (epsilon0 && !(*epsilon0 >= 0.0)) throw ValidationError("epsilon0 must be non-negative");
    const double j = bessel_j0_first_zero();
    return (kPi * j * j + epsilon0.value_or(0.0)) * k / area;
}

}  // namespace geoup::spectral
