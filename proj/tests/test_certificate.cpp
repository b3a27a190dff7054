#include <doctest.h>

#include "geoup/certificate.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace geoup;
using namespace geoup::certificate;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kC1 = 1.0 / 250.0;
constexpr double kC2 = 7.0 / 250.0;
constexpr double kC = 1.0 / 60000.0;

}  // namespace

TEST_CASE("big_set_bound") {
    CHECK(big_set_bound(kC1, 0.0) == 0.0);
    CHECK(big_set_bound(kC1, kC) == doctest::Approx(251.0 / 60000.0).epsilon(1e-14));
    CHECK(big_set_bound(1.0, 0.3) == doctest::Approx(0.6));
    CHECK_THROWS_AS(big_set_bound(0.0, 0.1), ValidationError);
}

TEST_CASE("neighborhood_amplification") {
    CHECK(neighborhood_amplification(0.0) == doctest::Approx(9.0).epsilon(1e-15));
    CHECK(neighborhood_amplification(kC1) == doctest::Approx(8.976).epsilon(1e-4));
    CHECK(neighborhood_amplification(3.0) == doctest::Approx(4.0).epsilon(1e-15));
    for (int i = 0; i <= 3000; ++i) CHECK(neighborhood_amplification(3.0 * i / 3000.0) <= 9.0);
}

TEST_CASE("lens lower bound") {
    const auto at = lens_lower_bound_check(kC2);
    CHECK(at.lens_value == doctest::Approx(0.01766).epsilon(1e-3));
    CHECK(at.bound_value == doctest::Approx(0.017336).epsilon(1e-4));
    CHECK(at.holds);
    CHECK(lens_lower_bound_check(0.05).holds);
    CHECK_THROWS_AS(lens_lower_bound_check(0.0), ValidationError);
    CHECK_THROWS_AS(lens_lower_bound_check(0.051), ValidationError);

    // Series limit: lens ≈ (8√2/3) c2^{3/2}.
    const auto tiny = lens_lower_bound_check(1e-6);
    CHECK(tiny.lens_value / tiny.bound_value == doctest::Approx((8.0 * std::sqrt(2.0) / 3.0) / 3.7).epsilon(1e-4));
    CHECK((8.0 * std::sqrt(2.0) / 3.0) / 3.7 > 1.0);
}

TEST_CASE("lens closed form equals lens_area across c2") {
    for (int i = 1; i <= 1000; ++i) {
        const double c2 = 0.05 * i / 1000.0;
        const auto r = lens_lower_bound_check(c2);
        CHECK(r.holds);
        CHECK(std::abs(r.lens_value - lens_area(1.0, 1.0, 2.0 * (1.0 - c2))) <= 1e-12);
    }
}

TEST_CASE("lens area over admissible radii is minimized at unit radii") {
    const double base = lens_area(1.0, 1.0, 2.0 * (1.0 - kC2));
    const double top = std::sqrt(1.0 + kC1);
    for (int i = 0; i < 100; ++i) {
        for (int j = 0; j < 100; ++j) {
            const double r1 = 1.0 + (top - 1.0) * i / 99.0;
            const double r2 = 1.0 + (top - 1.0) * j / 99.0;
            CHECK(lens_area(r1, r2, (1.0 - kC2) * (r1 + r2)) >= base - 1e-15);
        }
    }
}

TEST_CASE("small_overlap_bound") {
    CHECK(small_overlap_bound(kC1, kC2, 0.0) == 0.0);
    CHECK(small_overlap_bound(kC1, kC2, 1.0) == doctest::Approx(363.894).epsilon(1e-5));
    CHECK(small_overlap_bound(kC1, kC2, 2.0) == doctest::Approx(2.0 * small_overlap_bound(kC1, kC2, 1.0)));
}

TEST_CASE("pair neighborhood factor") {
    const double f = pair_neighborhood_factor();
    CHECK(f >= 6.37);
    CHECK(f <= 6.38);
    CHECK(f <= kPairFactorCap);
    CHECK(pair_dilation_ratio(2.0) == doctest::Approx(f).epsilon(1e-13));
    CHECK(pair_dilation_ratio(0.0) == doctest::Approx(1.0).epsilon(1e-15));

    const std::vector<Disk> pair{Disk({-1, 0}, 1.0), Disk({1, 0}, 1.0)};
    const auto mc = dilated_union_area(pair, 2.0, 17, 4'000'000);
    CHECK(std::abs(mc.value / (2.0 * kPi) - f) <= 3.0 * mc.std_error / (2.0 * kPi));
}

TEST_CASE("final inequality") {
    CHECK(final_inequality_lhs({kC1, kC2, 0.0, 0.0}) == doctest::Approx(0.944784).epsilon(1e-12));
    const ProofParams worst = worst_split(kC1, kC2, kC);
    const double lhs = final_inequality_lhs(worst);
    CHECK(lhs == doctest::Approx(0.90811).epsilon(1e-5));
    CHECK(lhs >= blind_density() + 1e-3 - 1e-9);
    CHECK(final_inequality_lhs({kC1, kC2, 2e-5, 0.0}) < final_inequality_lhs({kC1, kC2, 1e-5, 0.0}));
    CHECK(final_inequality_lhs({kC1, kC2, 0.0, 2e-5}) < final_inequality_lhs({kC1, kC2, 0.0, 1e-5}));
    CHECK_THROWS_AS(final_inequality_lhs({kC1, 0.06, 0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(final_inequality_lhs({kC1, kC2, -1.0, 0.0}), ValidationError);
}

TEST_CASE("chain at the reference parameter point") {
    const auto r = evaluate_chain(worst_split(kC1, kC2, kC));
    for (double v : {r.big_set_bound, r.neighborhood_bound, r.overlap_bound, r.pair_neighborhood_bound, r.lhs}) {
        CHECK(std::isfinite(v));
    }
    CHECK(r.lhs >= kPi / std::sqrt(12.0) + 1e-3 - 1e-9);
    CHECK(r.contradiction);
    CHECK(r.margin == doctest::Approx(r.lhs - r.blind_density).epsilon(1e-15));
    // lhs recomputes from the named bounds.
    const double u = 1.0 - kC2;
    CHECK(r.lhs == doctest::Approx(u * u * (1.0 - r.neighborhood_bound - r.pair_neighborhood_bound)).epsilon(1e-14));
    // The pair bound is the overlap bound times 32/5.
    CHECK(r.pair_neighborhood_bound == doctest::Approx(kPairFactorCap * r.overlap_bound).epsilon(1e-14));
}

TEST_CASE("certified constant") {
    const auto cert = certify_constant(kC1, kC2);
    CHECK(cert.c_max >= kC);
    CHECK(cert.diagnostic.empty());
    CHECK(cert.worst_d1 + cert.worst_d2 == doctest::Approx(cert.c_max));
    // Closed form versus the split sweep.
    const double target = blind_density();
    CHECK(std::abs(sweep_min_lhs(kC1, kC2, cert.c_max) - target) <= 1e-12);
    for (double c : {1e-6, kC, 5e-5}) {
        const double closed = final_inequality_lhs(worst_split(kC1, kC2, c));
        CHECK(std::abs(sweep_min_lhs(kC1, kC2, c) - closed) <= 1e-12);
    }
    // Limits.
    CHECK(certify_constant(kC1, 1e-9).c_max < 1e-9);
    CHECK(certify_constant(1e-9, kC2).c_max < 1e-9);
    // (1 − c2)² below the packing bound once c2 ≈ 0.0477.
    const auto none = certify_constant(kC1, 0.05);
    CHECK(none.c_max == 0.0);
    CHECK_FALSE(none.diagnostic.empty());
}

TEST_CASE("c_max is non-increasing in either coefficient") {
    const Coefficients k = coefficients(kC1, kC2);
    double prev = certify_from_coefficients(kC2, k);
    for (double f = 1.0; f <= 4.0; f += 0.25) {
        const double a = certify_from_coefficients(kC2, {k.k_asymmetry * f, k.k_deviation});
        const double b = certify_from_coefficients(kC2, {k.k_asymmetry, k.k_deviation * f});
        CHECK(a <= prev + 1e-18);
        CHECK(b <= prev + 1e-18);
    }
    prev = certify_from_coefficients(kC2, {1.0, 1.0});
    for (double k1 = 1.0; k1 < 1e4; k1 *= 1.5) {
        const double c = certify_from_coefficients(kC2, {k1, 1.0});
        CHECK(c <= prev);
        prev = c;
    }
}

TEST_CASE("parameter search") {
    const auto best = optimize_parameters();
    CHECK(best.c >= kC);
    CHECK(best.c >= certify_constant(kC1, kC2).c_max);
    CHECK(best.c >= best.grid_best);

    SearchGrid single;
    single.c1_values = {kC1};
    single.c2_values = {kC2};
    const auto point = optimize_parameters(single);
    CHECK(point.grid_best == certify_constant(kC1, kC2).c_max);
    CHECK(point.c >= point.grid_best);
    CHECK_THROWS_AS(optimize_parameters(SearchGrid{}), ValidationError);
}

TEST_CASE("dilation radius as a parameter") {
    const double at2 = certify_constant_with_dilation(kC1, kC2, 2.0);
    // The exact pair factor is below the 32/5 cap, so the constant can only improve.
    CHECK(at2 >= certify_constant(kC1, kC2).c_max);
    CHECK(certify_constant_with_dilation(kC1, kC2, 1.0) > at2);
}

TEST_CASE("shrink_disks") {
    const double c2 = kC2;
    const std::vector<Disk> pair{Disk({0, 0}, 1.0), Disk({2.0 * (1.0 - c2), 0}, 1.0)};
    const auto shrunk = shrink_disks(pair, c2);
    CHECK(shrunk[0].radius() + shrunk[1].radius() ==
          doctest::Approx(norm(shrunk[1].center() - shrunk[0].center())).epsilon(1e-15));

    const std::vector<Disk> apart{Disk({0, 0}, 1.0), Disk({3, 0}, 0.5)};
    const auto same = shrink_disks(apart, 0.0);
    CHECK(same[0].radius() == 1.0);
    CHECK(same[1].radius() == 0.5);
    CHECK(same[1].center() == apart[1].center());

    const std::vector<Disk> bad{Disk({0, 0}, 1.0), Disk({5, 5}, 1.0), Disk({1.0, 0}, 1.0)};
    try {
        shrink_disks(bad, c2);
        FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("disks 0 and 2") != std::string::npos);
    }

    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Disk> disks;
        while (disks.size() < 12) {
            const Disk d({10.0 * u(rng), 10.0 * u(rng)}, 0.5 + u(rng));
            bool ok = true;
            for (const Disk& e : disks) {
                ok = ok && norm(d.center() - e.center()) >= (1.0 - c2) * (d.radius() + e.radius());
            }
            if (ok) disks.push_back(d);
        }
        const auto out = shrink_disks(disks, c2);
        for (std::size_t i = 0; i < out.size(); ++i) {
            CHECK(out[i].radius() == doctest::Approx((1.0 - c2) * disks[i].radius()).epsilon(1e-15));
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                CHECK(norm(out[i].center() - out[j].center()) >=
                      (out[i].radius() + out[j].radius()) * (1.0 - 1e-12));
            }
        }
    }
}
