#include "geoup/geometry.hpp"

#include "geoup/parallel.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

namespace geoup {

namespace {

constexpr double kPi = std::numbers::pi;

Box bounds_of(std::span<const Point> pts) {
    Box b{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
          {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
    for (const Point& p : pts) {
        b.lo.x = std::min(b.lo.x, p.x);
        b.lo.y = std::min(b.lo.y, p.y);
        b.hi.x = std::max(b.hi.x, p.x);
        b.hi.y = std::max(b.hi.y, p.y);
    }
    return b;
}

Box merge(const Box& a, const Box& b) {
    return {{std::min(a.lo.x, b.lo.x), std::min(a.lo.y, b.lo.y)},
            {std::max(a.hi.x, b.hi.x), std::max(a.hi.y, b.hi.y)}};
}

// Signed area of (circle of radius r at origin) ∩ triangle(origin, a, b).
double sector_triangle_area(Point a, Point b, double r) {
    const Point d = b - a;
    const double r2 = r * r;
    const double qa = dot(d, d);
    if (qa == 0.0) return 0.0;
    const double qb = dot(a, d);
    const double qc = dot(a, a) - r2;
    const double disc = qb * qb - qa * qc;

    Point pts[4];
    int count = 0;
    pts[count++] = a;
    if (disc > 0.0) {
        const double s = std::sqrt(disc);
        const double t1 = (-qb - s) / qa;
        const double t2 = (-qb + s) / qa;
        if (t1 > 0.0 && t1 < 1.0) pts[count++] = a + t1 * d;
        if (t2 > 0.0 && t2 < 1.0) pts[count++] = a + t2 * d;
    }
    pts[count++] = b;

    double total = 0.0;
    for (int i = 0; i + 1 < count; ++i) {
        const Point p = pts[i];
        const Point q = pts[i + 1];
        const Point mid = 0.5 * (p + q);
        if (dot(mid, mid) <= r2) {
            total += 0.5 * cross(p, q);
        } else {
            total += 0.5 * r2 * std::atan2(cross(p, q), dot(p, q));
        }
    }
    return total;
}

}  // namespace

Point rotate(Point p, double angle, Point pivot) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Point v = p - pivot;
    return {pivot.x + c * v.x - s * v.y, pivot.y + s * v.x + c * v.y};
}

std::optional<Box> Box::intersect(const Box& other) const {
    Box b{{std::max(lo.x, other.lo.x), std::max(lo.y, other.lo.y)},
          {std::min(hi.x, other.hi.x), std::min(hi.y, other.hi.y)}};
    if (b.lo.x >= b.hi.x || b.lo.y >= b.hi.y) return std::nullopt;
    return b;
}

Box Box::expanded(double margin) const {
    return {{lo.x - margin, lo.y - margin}, {hi.x + margin, hi.y + margin}};
}

Disk::Disk(Point center, double radius) : center_(center), radius_(radius) {
    if (!std::isfinite(center.x) || !std::isfinite(center.y))
        throw ValidationError("disk center must be finite");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw ValidationError("disk radius must be positive and finite");
}

Box Disk::bounds() const {
    return {{center_.x - radius_, center_.y - radius_}, {center_.x + radius_, center_.y + radius_}};
}

bool Disk::contains(Point p) const {
    const Point v = p - center_;
    return dot(v, v) <= radius_ * radius_;
}

double signed_area(std::span<const Point> v) {
    const std::size_t n = v.size();
    if (n < 3) return 0.0;
    // Shoelace relative to the first vertex to limit cancellation.
    const Point o = v[0];
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) sum += cross(v[i] - o, v[i + 1] - o);
    return 0.5 * sum;
}

SimplePolygon::SimplePolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3)
        throw ValidationError("polygon needs at least 3 vertices, got " + std::to_string(vertices_.size()));
    for (const Point& p : vertices_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ValidationError("polygon vertex coordinates must be finite");
    }
    bounds_ = bounds_of(vertices_);
    area_ = signed_area(vertices_);
    const double scale = std::max(bounds_.width(), bounds_.height());
    if (!(area_ > 1e-12 * scale * scale)) {
        if (area_ < -1e-12 * scale * scale)
            throw ValidationError("polygon vertices must be in counterclockwise order");
        throw ValidationError("degenerate polygon (zero area)");
    }
}

Point SimplePolygon::centroid() const {
    const Point o = vertices_[0];
    double cx = 0.0;
    double cy = 0.0;
    double a2 = 0.0;
    for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
        const Point p = vertices_[i] - o;
        const Point q = vertices_[i + 1] - o;
        const double w = cross(p, q);
        a2 += w;
        cx += w * (p.x + q.x);
        cy += w * (p.y + q.y);
    }
    return {o.x + cx / (3.0 * a2), o.y + cy / (3.0 * a2)};
}

bool SimplePolygon::contains(Point p) const {
    if (!bounds_.contains(p)) return false;
    bool inside = false;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = vertices_[i];
        const Point b = vertices_[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside;
}

bool SimplePolygon::is_convex(double rel_tol) const {
    const std::size_t n = vertices_.size();
    const double scale = std::max(bounds_.width(), bounds_.height());
    const double tol = rel_tol * scale * scale;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = vertices_[i];
        const Point b = vertices_[(i + 1) % n];
        const Point c = vertices_[(i + 2) % n];
        if (cross(b - a, c - b) < -tol) return false;
    }
    return true;
}

SimplePolygon SimplePolygon::transformed(const std::function<Point(Point)>& map) const {
    std::vector<Point> out;
    out.reserve(vertices_.size());
    for (const Point& p : vertices_) out.push_back(map(p));
    return SimplePolygon(std::move(out));
}

Region::Region(std::vector<SimplePolygon> components) : components_(std::move(components)) {
    if (components_.empty()) throw ValidationError("region needs at least one component");
    bounds_ = components_.front().bounds();
    for (const auto& c : components_) {
        area_ += c.area();
        bounds_ = merge(bounds_, c.bounds());
    }
}

Region::Region(SimplePolygon polygon) : Region(std::vector<SimplePolygon>{std::move(polygon)}) {}

Point Region::centroid() const {
    double cx = 0.0;
    double cy = 0.0;
    for (const auto& c : components_) {
        const Point g = c.centroid();
        cx += c.area() * g.x;
        cy += c.area() * g.y;
    }
    return {cx / area_, cy / area_};
}

bool Region::contains(Point p) const {
    if (!bounds_.contains(p)) return false;
    return std::any_of(components_.begin(), components_.end(),
                       [&](const SimplePolygon& c) { return c.contains(p); });
}

std::size_t Region::vertex_count() const {
    std::size_t n = 0;
    for (const auto& c : components_) n += c.size();
    return n;
}

Region Region::translated(Point offset) const {
    std::vector<SimplePolygon> out;
    for (const auto& c : components_) out.push_back(c.transformed([&](Point p) { return p + offset; }));
    return Region(std::move(out));
}

Region Region::scaled(double factor, Point pivot) const {
    if (!(factor > 0.0)) throw ValidationError("scale factor must be positive");
    std::vector<SimplePolygon> out;
    for (const auto& c : components_)
        out.push_back(c.transformed([&](Point p) { return pivot + factor * (p - pivot); }));
    return Region(std::move(out));
}

Region Region::rotated(double angle, Point pivot) const {
    std::vector<SimplePolygon> out;
    for (const auto& c : components_)
        out.push_back(c.transformed([&](Point p) { return rotate(p, angle, pivot); }));
    return Region(std::move(out));
}

double polygon_area(const SimplePolygon& polygon) { return signed_area(polygon.vertices()); }

double lens_area(double r1, double r2, double d) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw ValidationError("lens radii must be positive");
    if (!(d >= 0.0)) throw ValidationError("lens center distance must be non-negative");
    if (d >= r1 + r2) return 0.0;
    const double rmin = std::min(r1, r2);
    if (d <= std::abs(r1 - r2)) return kPi * rmin * rmin;

    const double a1 = std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0);
    const double a2 = std::clamp((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0);
    const double k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
    return r1 * r1 * std::acos(a1) + r2 * r2 * std::acos(a2) - 0.5 * std::sqrt(std::max(0.0, k));
}

double disk_polygon_intersection_area(const Disk& b, const SimplePolygon& polygon) {
    if (!b.bounds().intersect(polygon.bounds())) return 0.0;
    const Point c = b.center();
    const double r = b.radius();
    const auto v = polygon.vertices();
    const std::size_t n = v.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total += sector_triangle_area(v[i] - c, v[(i + 1) % n] - c, r);
    }
    return std::clamp(total, 0.0, std::min(b.area(), polygon.area()));
}

double disk_polygon_intersection_area(const Disk& b, const Region& r) {
    double total = 0.0;
    for (const auto& c : r.components()) total += disk_polygon_intersection_area(b, c);
    return std::clamp(total, 0.0, std::min(b.area(), r.area()));
}

double symmetric_difference_area(const Disk& b, const Region& r) {
    return std::max(0.0, b.area() + r.area() - 2.0 * disk_polygon_intersection_area(b, r));
}

std::vector<Point> clip_half_plane(std::span<const Point> subject, Point a, Point b) {
    std::vector<Point> out;
    const std::size_t n = subject.size();
    if (n == 0) return out;
    out.reserve(n + 4);
    const Point e = b - a;
    auto side = [&](Point p) { return cross(e, p - a); };
    for (std::size_t i = 0; i < n; ++i) {
        const Point p = subject[i];
        const Point q = subject[(i + 1) % n];
        const double sp = side(p);
        const double sq = side(q);
        if (sp >= 0.0) out.push_back(p);
        if ((sp >= 0.0) != (sq >= 0.0)) {
            const double t = sp / (sp - sq);
            out.push_back(p + t * (q - p));
        }
    }
    return out;
}

std::vector<Point> clip_to_convex(std::span<const Point> subject, const SimplePolygon& window) {
    std::vector<Point> current(subject.begin(), subject.end());
    const auto w = window.vertices();
    for (std::size_t i = 0; i < w.size() && !current.empty(); ++i) {
        current = clip_half_plane(current, w[i], w[(i + 1) % w.size()]);
    }
    if (current.size() < 3) current.clear();
    return current;
}

double intersection_area_with_convex(const Region& r, const SimplePolygon& window) {
    double total = 0.0;
    for (const auto& c : r.components()) {
        if (!c.bounds().intersect(window.bounds())) continue;
        total += signed_area(clip_to_convex(c.vertices(), window));
    }
    return std::clamp(total, 0.0, std::min(r.area(), window.area()));
}

SimplePolygon regular_polygon(Point center, double circumradius, std::size_t n, double phase) {
    if (n < 3) throw ValidationError("regular polygon needs n >= 3");
    if (!(circumradius > 0.0)) throw ValidationError("circumradius must be positive");
    std::vector<Point> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = phase + 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        v.push_back({center.x + circumradius * std::cos(t), center.y + circumradius * std::sin(t)});
    }
    return SimplePolygon(std::move(v));
}

SimplePolygon equal_area_polygon(const Disk& disk, std::size_t n) {
    const double nn = static_cast<double>(n);
    const double factor = std::sqrt(2.0 * kPi / (nn * std::sin(2.0 * kPi / nn)));
    return regular_polygon(disk.center(), disk.radius() * factor, n);
}

SimplePolygon rectangle(Point lo, Point hi) {
    return SimplePolygon({lo, {hi.x, lo.y}, hi, {lo.x, hi.y}});
}

MonteCarloEstimate monte_carlo_area(const std::function<bool(Point)>& inside, const Box& box,
                                    std::size_t samples, std::uint64_t seed, unsigned workers) {
    if (samples == 0) throw ValidationError("Monte Carlo needs at least one sample");
    workers = std::max(1u, workers);
    std::vector<std::size_t> hits(workers, 0);
    parallel_for(workers, workers, [&](std::size_t w) {
        const std::size_t begin = samples * w / workers;
        const std::size_t end = samples * (w + 1) / workers;
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(w)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> ux(box.lo.x, box.hi.x);
        std::uniform_real_distribution<double> uy(box.lo.y, box.hi.y);
        std::size_t h = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const double x = ux(rng);
            const double y = uy(rng);
            if (inside({x, y})) ++h;
        }
        hits[w] = h;
    });
    std::size_t total = 0;
    for (std::size_t h : hits) total += h;
    const double p = static_cast<double>(total) / static_cast<double>(samples);
    const double a = box.area();
    return {a * p, a * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), samples};
}

MonteCarloEstimate dilated_union_area(std::span<const Disk> disks, double delta, std::uint64_t seed,
                                      std::size_t samples, unsigned workers) {
    if (disks.empty()) throw ValidationError("dilated_union_area needs at least one disk");
    if (!(delta >= 0.0)) throw ValidationError("dilation radius must be non-negative");
    Box box = disks.front().bounds();
    for (const Disk& d : disks) box = merge(box, d.bounds());
    box = box.expanded(delta);
    std::vector<Disk> grown;
    grown.reserve(disks.size());
    for (const Disk& d : disks) grown.emplace_back(d.center(), d.radius() + delta);
    auto inside = [&](Point p) {
        return std::any_of(grown.begin(), grown.end(), [&](const Disk& g) { return g.contains(p); });
    };
    return monte_carlo_area(inside, box, samples, seed, workers);
}

}  // namespace geoup
