#include "geoup/certificate.hpp"

#include "geoup/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace geoup::certificate {

namespace {

constexpr double kPi = std::numbers::pi;

void require_c1(double c1) {
    if (!(c1 > 0.0) || !std::isfinite(c1)) throw ValidationError("c1 must be positive and finite");
}

void require_c2(double c2) {
    if (!(c2 > 0.0 && c2 <= 0.05)) throw ValidationError("c2 must lie in (0, 0.05]");
}

}  // namespace

double blind_density() { return kPi / std::sqrt(12.0); }

void ProofParams::validate() const {
    require_c1(c1);
    require_c2(c2);
    if (!(d1 >= 0.0) || !std::isfinite(d1)) throw ValidationError("d1 must be non-negative and finite");
    if (!(d2 >= 0.0) || !std::isfinite(d2)) throw ValidationError("d2 must be non-negative and finite");
}

double big_set_bound(double c1, double d2) {
    require_c1(c1);
    if (!(d2 >= 0.0)) throw ValidationError("d2 must be non-negative");
    return d2 / c1 + d2;
}

double neighborhood_amplification(double c1, double dilation) {
    if (!(c1 >= 0.0)) throw ValidationError("c1 must be non-negative");
    if (!(dilation >= 0.0)) throw ValidationError("dilation radius must be non-negative");
    const double s = std::sqrt(1.0 + c1);
    return (s + dilation) * (s + dilation) / (1.0 + c1);
}

LensCheck lens_lower_bound_check(double c2) {
    require_c2(c2);
    LensCheck r;
    const double u = 1.0 - c2;
    r.lens_value = 2.0 * std::acos(u) - 2.0 * std::sqrt((2.0 - c2) * u * u * c2);
    r.bound_value = 3.7 * std::pow(c2, 1.5);
    r.holds = r.lens_value >= r.bound_value;
    return r;
}

double small_overlap_bound(double c1, double c2, double d1) {
    require_c1(c1);
    require_c2(c2);
    return (20.0 * kPi / 37.0) * (1.0 + c1) / std::pow(c2, 1.5) * d1;
}

double pair_dilation_ratio(double dilation) {
    if (!(dilation >= 0.0)) throw ValidationError("dilation radius must be non-negative");
    // Dilating a union is the union of dilated disks: two disks of radius
    // 1+δ at distance 2, minus their lens.
    const double r = 1.0 + dilation;
    return (2.0 * kPi * r * r - lens_area(r, r, 2.0)) / (2.0 * kPi);
}

double pair_neighborhood_factor() {
    return 4.5 + 2.0 * std::sqrt(2.0) / kPi + (9.0 / kPi) * std::asin(1.0 / 3.0);
}

Coefficients coefficients(double c1, double c2) {
    require_c1(c1);
    require_c2(c2);
    return {(128.0 * kPi / 37.0) * (1.0 + c1) / std::pow(c2, 1.5), 9.0 / c1 + 9.0};
}

double final_inequality_lhs(const ProofParams& p) {
    p.validate();
    const double u = 1.0 - p.c2;
    const double removed = 9.0 * p.d2 / p.c1 + 9.0 * p.d2 + (128.0 * kPi / 37.0) * ((1.0 + p.c1) / std::pow(p.c2, 1.5)) * p.d1;
    return u * u * (1.0 - removed);
}

CertificateReport evaluate_chain(const ProofParams& p) {
    p.validate();
    CertificateReport r;
    r.params = p;
    r.big_set_bound = big_set_bound(p.c1, p.d2);
    r.neighborhood_bound = 9.0 * r.big_set_bound;
    r.overlap_bound = small_overlap_bound(p.c1, p.c2, p.d1);
    r.pair_neighborhood_bound = (128.0 * kPi / 37.0) * ((1.0 + p.c1) / std::pow(p.c2, 1.5)) * p.d1;
    r.lhs = final_inequality_lhs(p);
    r.blind_density = blind_density();
    r.margin = r.lhs - r.blind_density;
    r.contradiction = r.margin > 0.0;
    return r;
}

ProofParams worst_split(double c1, double c2, double c) {
    // lhs = (1−c2)²[1 − K1 d1 − K2 d2] is affine in (d1, d2); on the segment
    // d1 + d2 = c its minimum is at the endpoint with the larger coefficient.
    const Coefficients k = coefficients(c1, c2);
    if (k.k_asymmetry >= k.k_deviation) return {c1, c2, c, 0.0};
    return {c1, c2, 0.0, c};
}

double certify_from_coefficients(double c2, const Coefficients& k) {
    const double u = 1.0 - c2;
    const double numerator = 1.0 - blind_density() / (u * u);
    if (numerator <= 0.0) return 0.0;
    return numerator / std::max(k.k_asymmetry, k.k_deviation);
}

CertifiedConstant certify_constant(double c1, double c2) {
    require_c1(c1);
    require_c2(c2);
    CertifiedConstant out;
    if (!lens_lower_bound_check(c2).holds) {
        out.diagnostic = "lens lower bound 3.7 c2^{3/2} fails at this c2";
        return out;
    }
    if (neighborhood_amplification(c1) > 9.0) {
        out.diagnostic = "neighbourhood amplification exceeds 9";
        return out;
    }
    const double u = 1.0 - c2;
    if (u * u <= blind_density()) {
        out.diagnostic = "(1-c2)^2 <= pi/sqrt(12): shrinking alone drops below the packing bound";
        return out;
    }
    out.c_max = certify_from_coefficients(c2, coefficients(c1, c2));
    const ProofParams w = worst_split(c1, c2, out.c_max);
    out.worst_d1 = w.d1;
    out.worst_d2 = w.d2;
    return out;
}

double certify_constant_with_dilation(double c1, double c2, double dilation) {
    require_c1(c1);
    require_c2(c2);
    const double amp = (1.0 + dilation) * (1.0 + dilation);
    const Coefficients k{pair_dilation_ratio(dilation) * (20.0 * kPi / 37.0) * (1.0 + c1) / std::pow(c2, 1.5),
                         amp / c1 + amp};
    return certify_from_coefficients(c2, k);
}

double sweep_min_lhs(double c1, double c2, double c, std::size_t points) {
    if (points < 2) throw ValidationError("sweep needs at least two points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        best = std::min(best, final_inequality_lhs({c1, c2, t * c, (1.0 - t) * c}));
    }
    return best;
}

SearchGrid SearchGrid::default_grid() {
    SearchGrid g;
    constexpr int n = 60;
    for (int i = 0; i < n; ++i) {
        g.c1_values.push_back(std::pow(10.0, -4.0 + 4.0 * i / (n - 1)));
        g.c2_values.push_back(0.05 * (i + 1) / n);
    }
    return g;
}

OptimizedParameters optimize_parameters(const SearchGrid& grid) {
    if (grid.c1_values.empty() || grid.c2_values.empty()) throw ValidationError("optimize_parameters: empty grid");
    for (double c2 : grid.c2_values) require_c2(c2);
    for (double c1 : grid.c1_values) require_c1(c1);

    std::vector<double> c1s = grid.c1_values;
    std::vector<double> c2s = grid.c2_values;
    std::sort(c1s.begin(), c1s.end());
    std::sort(c2s.begin(), c2s.end());

    OptimizedParameters best{c1s.front(), c2s.front(), -1.0, -1.0};
    for (double c1 : c1s) {
        for (double c2 : c2s) {
            const double c = certify_constant(c1, c2).c_max;
            if (c > best.c) best = {c1, c2, c, c};
        }
    }
    best.grid_best = best.c;

    // Refine in (log c1, c2); leaving the admissible box scores +inf.
    auto objective = [](const std::vector<double>& x) {
        const double c1 = std::exp(x[0]);
        const double c2 = x[1];
        if (!(c2 > 0.0 && c2 <= 0.05) || !std::isfinite(c1) || !(c1 > 0.0))
            return std::numeric_limits<double>::infinity();
        return -certify_constant(c1, c2).c_max;
    };
    NelderMeadSettings nm;
    nm.max_evaluations = 2000;
    nm.x_tolerance = 1e-12;
    nm.f_tolerance = 1e-18;
    const auto res = nelder_mead(objective, {std::log(best.c1), best.c2}, {0.05, 0.0005}, nm);
    if (-res.value > best.c) {
        best.c1 = std::exp(res.x[0]);
        best.c2 = res.x[1];
        best.c = -res.value;
    }
    return best;
}

std::vector<Disk> shrink_disks(std::span<const Disk> disks, double c2) {
    if (!(c2 >= 0.0 && c2 < 1.0)) throw ValidationError("shrink factor c2 must lie in [0, 1)");
    const double f = 1.0 - c2;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            const double need = f * (disks[i].radius() + disks[j].radius());
            const double dist = norm(disks[i].center() - disks[j].center());
            if (dist < need * (1.0 - 1e-12)) {
                throw ValidationError("shrink_disks: disks " + std::to_string(i) + " and " + std::to_string(j) +
                                      " are closer than (1-c2)(r_i+r_j)");
            }
        }
    }
    std::vector<Disk> out;
    out.reserve(disks.size());
    for (const Disk& d : disks) out.emplace_back(d.center(), f * d.radius());
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            const double reach = out[i].radius() + out[j].radius();
            if (norm(out[i].center() - out[j].center()) < reach * (1.0 - 1e-12))
                throw ValidationError("shrink_disks: shrunk disks overlap");
        }
    }
    return out;
}

}  // namespace geoup::certificate
