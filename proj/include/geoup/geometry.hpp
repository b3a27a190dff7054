#pragma once

// Planar primitives and exact / Monte Carlo area computations.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace geoup {

/// Raised when an input violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }

/// Rotates `p` about `pivot` by `angle` radians (counterclockwise).
Point rotate(Point p, double angle, Point pivot = {});

struct Box {
    Point lo;
    Point hi;

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double area() const { return width() * height(); }
    double diagonal() const { return std::hypot(width(), height()); }
    bool contains(Point p) const { return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y; }
    /// Intersection box; empty when the boxes do not overlap with positive area.
    std::optional<Box> intersect(const Box& other) const;
    Box expanded(double margin) const;
};

class Disk {
public:
    Disk(Point center, double radius);

    Point center() const { return center_; }
    double radius() const { return radius_; }
    double area() const { return std::numbers::pi * radius_ * radius_; }
    Box bounds() const;
    bool contains(Point p) const;

private:
    Point center_;
    double radius_;
};

/// Counterclockwise simple polygon, implicitly closed.
class SimplePolygon {
public:
    explicit SimplePolygon(std::vector<Point> vertices);

    std::span<const Point> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    double area() const { return area_; }
    const Box& bounds() const { return bounds_; }
    Point centroid() const;
    /// Even-odd crossing test.
    bool contains(Point p) const;
    bool is_convex(double rel_tol = 1e-12) const;

    SimplePolygon transformed(const std::function<Point(Point)>& map) const;

private:
    std::vector<Point> vertices_;
    double area_ = 0.0;
    Box bounds_;
};

/// Finite union of simple polygons with pairwise disjoint interiors.
class Region {
public:
    explicit Region(std::vector<SimplePolygon> components);
    explicit Region(SimplePolygon polygon);

    std::span<const SimplePolygon> components() const { return components_; }
    double area() const { return area_; }
    const Box& bounds() const { return bounds_; }
    Point centroid() const;
    bool contains(Point p) const;
    std::size_t vertex_count() const;

    Region translated(Point offset) const;
    Region scaled(double factor, Point pivot = {}) const;
    Region rotated(double angle, Point pivot = {}) const;

private:
    std::vector<SimplePolygon> components_;
    double area_ = 0.0;
    Box bounds_;
};

/// Signed shoelace area; positive for counterclockwise vertex order.
double signed_area(std::span<const Point> vertices);

/// Shoelace area of a validated polygon.
double polygon_area(const SimplePolygon& polygon);

/// Area of the intersection of two disks with radii `r1`, `r2` whose
/// centers are `d` apart.
double lens_area(double r1, double r2, double d);

/// Exact |b ∩ r| by splitting every edge at its circle crossings and summing
/// straight-edge triangles and circular sectors (Green's theorem).
double disk_polygon_intersection_area(const Disk& b, const SimplePolygon& polygon);
double disk_polygon_intersection_area(const Disk& b, const Region& r);

/// |b △ r| = |b| + |r| − 2|b ∩ r|.
double symmetric_difference_area(const Disk& b, const Region& r);

/// Sutherland–Hodgman clip of `subject` against the convex polygon `window`.
/// The subject may be nonconvex; the returned vertex loop has the correct
/// signed area but may contain zero-width bridges. Empty when nothing is left.
std::vector<Point> clip_to_convex(std::span<const Point> subject, const SimplePolygon& window);

/// Clips `subject` against the half-plane to the left of the directed line a→b.
std::vector<Point> clip_half_plane(std::span<const Point> subject, Point a, Point b);

/// |r ∩ window| for convex `window`.
double intersection_area_with_convex(const Region& r, const SimplePolygon& window);

/// Regular n-gon with vertices on the circle of the given radius,
/// first vertex at angle `phase`.
SimplePolygon regular_polygon(Point center, double circumradius, std::size_t n, double phase = 0.0);

/// Regular n-gon whose area equals the disk's area.
SimplePolygon equal_area_polygon(const Disk& disk, std::size_t n = 1024);

/// Axis-aligned rectangle as a counterclockwise polygon.
SimplePolygon rectangle(Point lo, Point hi);

struct MonteCarloEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

/// Hit-or-miss estimate of |{p ∈ box : inside(p)}|. Samples are split over
/// `workers` substreams seeded from (seed, worker index), so the estimate
/// depends only on (seed, samples, workers).
MonteCarloEstimate monte_carlo_area(const std::function<bool(Point)>& inside, const Box& box,
                                    std::size_t samples, std::uint64_t seed, unsigned workers = 1);

/// Monte Carlo estimate of |{x : dist(x, ∪disks) ≤ delta}|.
MonteCarloEstimate dilated_union_area(std::span<const Disk> disks, double delta, std::uint64_t seed,
                                      std::size_t samples = 10'000'000, unsigned workers = 1);

}  // namespace geoup
