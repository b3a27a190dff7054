#include <doctest.h>

#include "geoup/geometry.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace geoup;
using geoup::testing::random_convex_polygon;

namespace {

constexpr double kPi = std::numbers::pi;

bool in_disk(Point p, Point c, double r) { return std::hypot(p.x - c.x, p.y - c.y) <= r; }

// Fan triangulation from vertex 0, summed independently of the shoelace code.
double fan_area(std::span<const Point> v) {
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const Point a = v[i] - v[0];
        const Point b = v[i + 1] - v[0];
        total += 0.5 * (a.x * b.y - a.y * b.x);
    }
    return total;
}

}  // namespace

TEST_CASE("polygon_area on the basic shapes") {
    CHECK(polygon_area(rectangle({0, 0}, {1, 1})) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(polygon_area(SimplePolygon({{0, 0}, {1, 0}, {0, 1}})) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(polygon_area(regular_polygon({0, 0}, 1.0, 6)) == doctest::Approx(3.0 * std::sqrt(3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("polygon_area agrees with a fan triangulation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const SimplePolygon p = random_convex_polygon(rng, {0.3, -0.2}, 2.0);
        CHECK(polygon_area(p) == doctest::Approx(fan_area(p.vertices())).epsilon(1e-12));
    }
    // Nonconvex L shape.
    const SimplePolygon l({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    CHECK(polygon_area(l) == doctest::Approx(3.0));
    CHECK(polygon_area(l) == doctest::Approx(fan_area(l.vertices())));
}

TEST_CASE("polygon validation") {
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 1}, {2, 2}}), ValidationError);
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {0, 1}, {1, 0}}), ValidationError);  // clockwise
    CHECK_THROWS_AS(SimplePolygon({{0, 0}, {1, 0}, {0, NAN}}), ValidationError);
    CHECK_THROWS_AS(Disk({0, 0}, -1.0), ValidationError);
}

TEST_CASE("lens_area closed cases and Monte Carlo oracle") {
    CHECK(lens_area(1, 1, 0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(lens_area(1, 1, 2) == doctest::Approx(0.0));
    CHECK(lens_area(1, 3, 0.5) == doctest::Approx(kPi));  // contained
    CHECK(lens_area(1, 1, 5) == 0.0);
    CHECK_THROWS_AS(lens_area(-1, 1, 1), ValidationError);
    CHECK_THROWS_AS(lens_area(1, 1, -1), ValidationError);

    const double d = 2.0 * (1.0 - 0.028);
    const double exact = lens_area(1, 1, d);
    CHECK(exact == doctest::Approx(0.01766).epsilon(1e-3));
    const Box box{{d - 1.0, -1.0}, {1.0, 1.0}};
    const auto mc = monte_carlo_area([&](Point p) { return in_disk(p, {0, 0}, 1) && in_disk(p, {d, 0}, 1); }, box,
                                     10'000'000, 7);
    CHECK(std::abs(mc.value - exact) <= 3.0 * mc.std_error);
}

TEST_CASE("lens_area symmetry, monotonicity and continuity") {
    for (double r1 : {0.5, 1.0, 1.7}) {
        for (double r2 : {0.3, 1.0, 2.2}) {
            const double lo = std::abs(r1 - r2);
            const double hi = r1 + r2;
            double prev = lens_area(r1, r2, lo);
            CHECK(prev == doctest::Approx(kPi * std::min(r1, r2) * std::min(r1, r2)).epsilon(1e-12));
            for (int k = 1; k <= 200; ++k) {
                const double d = lo + (hi - lo) * k / 200.0;
                const double v = lens_area(r1, r2, d);
                CHECK(v == doctest::Approx(lens_area(r2, r1, d)).epsilon(1e-13));
                CHECK(v <= prev + 1e-13);
                prev = v;
            }
            CHECK(lens_area(r1, r2, hi) == doctest::Approx(0.0));
            CHECK(lens_area(r1, r2, hi - 1e-9) < 1e-9);
            CHECK(lens_area(r1, r2, lo + 1e-12) == doctest::Approx(lens_area(r1, r2, lo)).epsilon(1e-6));
        }
    }
}

TEST_CASE("disk_polygon_intersection_area examples") {
    const Disk unit({0, 0}, 1.0);
    CHECK(disk_polygon_intersection_area(unit, Region(rectangle({-2, -2}, {2, 2}))) ==
          doctest::Approx(kPi).epsilon(1e-14));
    CHECK(disk_polygon_intersection_area(unit, Region(rectangle({0, -10}, {10, 10}))) ==
          doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(disk_polygon_intersection_area(unit, Region(rectangle({5, 5}, {6, 6}))) == 0.0);
    // Polygon inside the disk.
    CHECK(disk_polygon_intersection_area(Disk({0, 0}, 10), Region(rectangle({0, 0}, {1, 1}))) ==
          doctest::Approx(1.0));

    const Disk off({0.5, 0.5}, 1.0);
    const Region square(rectangle({0, 0}, {1, 1}));
    const double exact = disk_polygon_intersection_area(off, square);
    const auto mc = monte_carlo_area([&](Point p) { return in_disk(p, {0.5, 0.5}, 1.0); }, square.bounds(),
                                     10'000'000, 3);
    CHECK(std::abs(exact - mc.value) <= 1e-4);
}

TEST_CASE("exact areas match Monte Carlo on random disk/polygon pairs") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const SimplePolygon poly = random_convex_polygon(rng, {u(rng), u(rng)}, 1.0 + 0.5 * u(rng));
        const Disk disk({u(rng), u(rng)}, 0.5 + 0.4 * (u(rng) + 1.0));
        const double exact = disk_polygon_intersection_area(disk, Region(poly));
        CHECK(exact >= 0.0);
        CHECK(exact <= std::min(disk.area(), poly.area()) + 1e-12);
        const auto mc = monte_carlo_area(
            [&](Point p) { return disk.contains(p) && poly.contains(p); }, poly.bounds(), 200'000,
            static_cast<std::uint64_t>(trial));
        if (std::abs(exact - mc.value) > 4.0 * mc.std_error + 1e-12) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("symmetric_difference_area") {
    const Disk d({0.3, -0.7}, 1.3);
    CHECK(symmetric_difference_area(d, Region(equal_area_polygon(d))) <= 1e-3);
    CHECK(polygon_area(equal_area_polygon(d)) == doctest::Approx(d.area()).epsilon(1e-12));

    const Disk far({10, 10}, 0.5);
    const Region sq(rectangle({0, 0}, {2, 2}));
    CHECK(symmetric_difference_area(far, sq) == doctest::Approx(far.area() + 4.0));

    // Unit-area disk against the concentric unit square.
    const Disk unit_area({0.5, 0.5}, std::sqrt(1.0 / kPi));
    const Region unit(rectangle({0, 0}, {1, 1}));
    const double exact = symmetric_difference_area(unit_area, unit);
    const Box box = unit.bounds().expanded(0.1);
    const auto mc = monte_carlo_area(
        [&](Point p) { return unit_area.contains(p) != unit.contains(p); }, box, 10'000'000, 5);
    CHECK(std::abs(exact - mc.value) <= 3.0 * mc.std_error);
}

TEST_CASE("dilated_union_area") {
    const std::vector<Disk> one{Disk({0, 0}, 1.0)};
    const auto nine = dilated_union_area(one, 2.0, 1, 2'000'000);
    CHECK(std::abs(nine.value - 9.0 * kPi) <= 3.0 * nine.std_error);
    const auto same = dilated_union_area(one, 0.0, 2, 2'000'000);
    CHECK(std::abs(same.value - kPi) <= 3.0 * same.std_error);

    const std::vector<Disk> pair{Disk({-1, 0}, 1.0), Disk({1, 0}, 1.0)};
    const double closed = 2.0 * kPi * (4.5 + 2.0 * std::sqrt(2.0) / kPi + (9.0 / kPi) * std::asin(1.0 / 3.0));
    const auto est = dilated_union_area(pair, 2.0, 3, 4'000'000);
    CHECK(std::abs(est.value - closed) <= 3.0 * est.std_error);

    CHECK_THROWS_AS(dilated_union_area({}, 1.0, 0), ValidationError);
}

TEST_CASE("Monte Carlo is reproducible per seed and worker split") {
    auto inside = [](Point p) { return p.x * p.x + p.y * p.y <= 1.0; };
    const Box box{{-1, -1}, {1, 1}};
    const auto a = monte_carlo_area(inside, box, 100'000, 42, 3);
    const auto b = monte_carlo_area(inside, box, 100'000, 42, 3);
    CHECK(a.value == b.value);
    CHECK(a.samples == 100'000);
    const auto c = monte_carlo_area(inside, box, 100'000, 43, 3);
    CHECK(a.value != c.value);
}

TEST_CASE("clipping against a convex window") {
    const SimplePolygon window = rectangle({0, 0}, {1, 1});
    const Region l(SimplePolygon({{-1, -1}, {2, -1}, {2, 0.5}, {0.5, 0.5}, {0.5, 2}, {-1, 2}}));
    // L ∩ unit square = unit square minus the [0.5,1]² corner.
    CHECK(intersection_area_with_convex(l, window) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(clip_to_convex(rectangle({3, 3}, {4, 4}).vertices(), window).empty());
}

TEST_CASE("region transforms preserve area") {
    const Region r(std::vector<SimplePolygon>{rectangle({0, 0}, {1, 1}), regular_polygon({3, 0}, 1, 7)});
    CHECK(r.translated({5, -2}).area() == doctest::Approx(r.area()).epsilon(1e-14));
    CHECK(r.rotated(0.7).area() == doctest::Approx(r.area()).epsilon(1e-13));
    CHECK(r.scaled(2.0).area() == doctest::Approx(4.0 * r.area()).epsilon(1e-14));
    CHECK(r.contains({0.5, 0.5}));
    CHECK(r.contains({3, 0}));
    CHECK_FALSE(r.contains({1.5, 0.5}));
}
