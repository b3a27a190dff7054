#pragma once

// Shared oracles and random inputs for the test suites.

#include "geoup/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

namespace geoup::testing {

// Andrew's monotone chain, counterclockwise, collinear points dropped.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    if (pts.size() < 3) return pts;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 1]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 1]) <= 0.0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

// Hull of 4 to 12 points on a noisy circle; always a proper convex polygon.
inline SimplePolygon random_convex_polygon(std::mt19937_64& rng, Point center, double scale) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        const int n = 4 + static_cast<int>(u(rng) * 9);
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) {
            const double a = 2.0 * std::numbers::pi * u(rng);
            const double r = scale * (0.5 + 0.5 * u(rng));
            pts.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
        }
        auto hull = convex_hull(pts);
        if (hull.size() >= 3 && signed_area(hull) > 0.05 * scale * scale) return SimplePolygon(hull);
    }
}

// Exhaustive scan of disk centers over a grid on the bounding box, exact objective.
template <class Objective>
double grid_minimum(const Box& box, std::size_t n, const Objective& objective) {
    double best = 2.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const Point c{box.lo.x + box.width() * (static_cast<double>(i) + 0.5) / static_cast<double>(n),
                          box.lo.y + box.height() * (static_cast<double>(j) + 0.5) / static_cast<double>(n)};
            best = std::min(best, objective(c));
        }
    }
    return best;
}

}  // namespace geoup::testing
