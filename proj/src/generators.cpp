#include "geoup/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>

namespace geoup {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

const SimplePolygon& domain_polygon(const GeneratorSpec& spec) { return spec.domain.components().front(); }

void drop_near_duplicates(std::vector<Point>& pts, double eps) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) {
        if (!out.empty() && norm(p - out.back()) <= eps) continue;
        out.push_back(p);
    }
    while (out.size() > 1 && norm(out.front() - out.back()) <= eps) out.pop_back();
    pts = std::move(out);
}

// Clips a cell to the (convex) domain. Cells whose remaining area is a
// negligible sliver of the nominal cell area are dropped.
std::optional<Region> clip_cell(std::span<const Point> cell, const SimplePolygon& domain, double nominal_area,
                                double eps) {
    std::vector<Point> clipped = clip_to_convex(cell, domain);
    drop_near_duplicates(clipped, eps);
    if (clipped.size() < 3) return std::nullopt;
    if (!(signed_area(clipped) > 1e-9 * nominal_area)) return std::nullopt;
    return Region(SimplePolygon(std::move(clipped)));
}

std::vector<Region> hex_cells(const GeneratorSpec& spec) {
    const SimplePolygon& dom = domain_polygon(spec);
    const double cell_area = dom.area() / static_cast<double>(spec.target_cells);
    const double side = std::sqrt(2.0 * cell_area / (3.0 * kSqrt3));
    const double dx = kSqrt3 * side;
    const double dy = 1.5 * side;
    const Box box = dom.bounds().expanded(2.0 * side);
    const Point origin = dom.bounds().lo;

    const long jlo = static_cast<long>(std::floor((box.lo.y - origin.y) / dy)) - 1;
    const long jhi = static_cast<long>(std::ceil((box.hi.y - origin.y) / dy)) + 1;
    const long ilo = static_cast<long>(std::floor((box.lo.x - origin.x) / dx)) - 1;
    const long ihi = static_cast<long>(std::ceil((box.hi.x - origin.x) / dx)) + 1;

    std::vector<Region> cells;
    for (long j = jlo; j <= jhi; ++j) {
        const double shift = (j % 2 != 0) ? 0.5 * dx : 0.0;
        for (long i = ilo; i <= ihi; ++i) {
            const Point c{origin.x + static_cast<double>(i) * dx + shift, origin.y + static_cast<double>(j) * dy};
            std::vector<Point> hex;
            hex.reserve(6);
            for (int k = 0; k < 6; ++k) {
                const double t = kPi / 6.0 + static_cast<double>(k) * kPi / 3.0;
                hex.push_back({c.x + side * std::cos(t), c.y + side * std::sin(t)});
            }
            if (auto cell = clip_cell(hex, dom, cell_area, 1e-12 * side)) cells.push_back(std::move(*cell));
        }
    }
    return cells;
}

std::vector<Region> square_cells(const GeneratorSpec& spec) {
    const SimplePolygon& dom = domain_polygon(spec);
    const Box& b = dom.bounds();
    const double target = static_cast<double>(spec.target_cells);
    const long nx = std::max(1L, std::lround(std::sqrt(target * b.width() / b.height())));
    const long ny = std::max(1L, std::lround(target / static_cast<double>(nx)));
    const double w = b.width() / static_cast<double>(nx);
    const double h = b.height() / static_cast<double>(ny);
    const double nominal = w * h;

    std::vector<Region> cells;
    for (long j = 0; j < ny; ++j) {
        for (long i = 0; i < nx; ++i) {
            const Point lo{b.lo.x + static_cast<double>(i) * w, b.lo.y + static_cast<double>(j) * h};
            const Point hi{i + 1 == nx ? b.hi.x : lo.x + w, j + 1 == ny ? b.hi.y : lo.y + h};
            const std::array<Point, 4> rect{lo, Point{hi.x, lo.y}, hi, Point{lo.x, hi.y}};
            if (auto cell = clip_cell(rect, dom, nominal, 1e-12 * std::max(w, h))) cells.push_back(std::move(*cell));
        }
    }
    return cells;
}

// Triangular lattice of disk centers with spacing 2ρ; lattice directions are
// multiples of 60°. Every disk polygon carries vertices at those six
// directions so that interstitial cells reuse the exact same boundary points.
struct DiskLattice {
    double rho = 0.0;
    double ratio = 1.0;
    bool two_scale = false;
    Point origin;
    std::vector<double> angles;     // sorted vertex angles in [0, 2π)
    std::array<std::size_t, 6> direction_index{};

    Point center(long i, long j) const {
        return {origin.x + 2.0 * rho * static_cast<double>(i) + rho * static_cast<double>(j),
                origin.y + kSqrt3 * rho * static_cast<double>(j)};
    }
    double radius(long i, long j) const {
        const bool small = two_scale && ((i % 2 + 2) % 2 == 0) && ((j % 2 + 2) % 2 == 0);
        return small ? ratio * rho : rho;
    }
    Point vertex(long i, long j, std::size_t k) const {
        const Point c = center(i, j);
        const double r = radius(i, j);
        return {c.x + r * std::cos(angles[k]), c.y + r * std::sin(angles[k])};
    }
};

DiskLattice make_lattice(const GeneratorSpec& spec, double rho) {
    DiskLattice lat;
    lat.rho = rho;
    lat.two_scale = spec.kind == GeneratorKind::two_scale;
    lat.ratio = lat.two_scale ? spec.ratio : 1.0;
    lat.origin = domain_polygon(spec).bounds().lo;

    const std::size_t n = std::max<std::size_t>(6, spec.disk_vertices);
    std::vector<double> angles;
    for (std::size_t m = 0; m < n; ++m) angles.push_back(2.0 * kPi * static_cast<double>(m) / static_cast<double>(n));
    std::array<double, 6> dirs{};
    for (int k = 0; k < 6; ++k) dirs[k] = static_cast<double>(k) * kPi / 3.0;
    // Base angles within 1e-12 of a lattice direction are replaced by it.
    std::erase_if(angles, [&](double a) {
        return std::any_of(dirs.begin(), dirs.end(), [&](double d) { return std::abs(a - d) < 1e-12; });
    });
    angles.insert(angles.end(), dirs.begin(), dirs.end());
    std::sort(angles.begin(), angles.end());
    lat.angles = std::move(angles);
    for (int k = 0; k < 6; ++k) {
        lat.direction_index[k] = static_cast<std::size_t>(
            std::find(lat.angles.begin(), lat.angles.end(), dirs[k]) - lat.angles.begin());
    }
    return lat;
}

// Appends the clockwise arc of disk (i, j) from lattice direction `from` to `to`.
void append_arc(const DiskLattice& lat, long i, long j, int from, int to, std::vector<Point>& out) {
    const std::size_t count = lat.angles.size();
    std::size_t k = lat.direction_index[from];
    const std::size_t stop = lat.direction_index[to];
    for (;;) {
        out.push_back(lat.vertex(i, j, k));
        if (k == stop) break;
        k = (k + count - 1) % count;
    }
}

GeneratedPartition packing_cells(const GeneratorSpec& spec) {
    const SimplePolygon& dom = domain_polygon(spec);
    const double disks_wanted = std::max(1.0, static_cast<double>(spec.target_cells) / 3.0);
    const double rho = std::sqrt(dom.area() / (disks_wanted * 2.0 * kSqrt3));
    const DiskLattice lat = make_lattice(spec, rho);

    const Box box = dom.bounds().expanded(3.0 * rho);
    const long jlo = static_cast<long>(std::floor((box.lo.y - lat.origin.y) / (kSqrt3 * rho))) - 1;
    const long jhi = static_cast<long>(std::ceil((box.hi.y - lat.origin.y) / (kSqrt3 * rho))) + 1;
    const double eps = 1e-12 * rho;
    const double disk_nominal = kPi * rho * rho;
    const double gap_nominal = (kSqrt3 - kPi / 2.0) * rho * rho;

    std::vector<Region> cells;
    std::vector<Disk> disks;
    for (long j = jlo; j <= jhi; ++j) {
        const double row_x = lat.origin.x + rho * static_cast<double>(j);
        const long ilo = static_cast<long>(std::floor((box.lo.x - row_x) / (2.0 * rho))) - 1;
        const long ihi = static_cast<long>(std::ceil((box.hi.x - row_x) / (2.0 * rho))) + 1;
        for (long i = ilo; i <= ihi; ++i) {
            std::vector<Point> disk_poly;
            disk_poly.reserve(lat.angles.size());
            for (std::size_t k = 0; k < lat.angles.size(); ++k) disk_poly.push_back(lat.vertex(i, j, k));
            if (auto cell = clip_cell(disk_poly, dom, disk_nominal, eps)) {
                cells.push_back(std::move(*cell));
                disks.emplace_back(lat.center(i, j), lat.radius(i, j));
            }
            if (j == jhi || i == ihi) continue;

            // Up triangle (i,j), (i+1,j), (i,j+1).
            std::vector<Point> up;
            append_arc(lat, i, j, 1, 0, up);
            append_arc(lat, i + 1, j, 3, 2, up);
            append_arc(lat, i, j + 1, 5, 4, up);
            drop_near_duplicates(up, eps);
            if (auto cell = clip_cell(up, dom, gap_nominal, eps)) cells.push_back(std::move(*cell));

            // Down triangle (i+1,j), (i+1,j+1), (i,j+1).
            std::vector<Point> down;
            append_arc(lat, i + 1, j, 2, 1, down);
            append_arc(lat, i + 1, j + 1, 4, 3, down);
            append_arc(lat, i, j + 1, 0, 5, down);
            drop_near_duplicates(down, eps);
            if (auto cell = clip_cell(down, dom, gap_nominal, eps)) cells.push_back(std::move(*cell));
        }
    }
    return {Partition(spec.domain, std::move(cells)), std::move(disks)};
}

std::vector<Region> voronoi_cells(const GeneratorSpec& spec) {
    const SimplePolygon& dom = domain_polygon(spec);
    const Box& b = dom.bounds();
    std::mt19937_64 rng(spec.seed);
    std::poisson_distribution<std::size_t> count_dist(static_cast<double>(spec.target_cells));
    const std::size_t count = count_dist(rng);
    std::uniform_real_distribution<double> ux(b.lo.x, b.hi.x);
    std::uniform_real_distribution<double> uy(b.lo.y, b.hi.y);
    std::vector<Point> sites;
    sites.reserve(count);
    while (sites.size() < count) {
        const Point p{ux(rng), uy(rng)};
        if (dom.contains(p)) sites.push_back(p);
    }
    if (sites.empty()) throw ValidationError("voronoi generator drew no sites; increase target_cells");

    const double nominal = dom.area() / static_cast<double>(sites.size());
    const double eps = 1e-12 * b.diagonal();
    std::vector<Region> cells;
    std::vector<std::size_t> order(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const Point s = sites[i];
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
            const double da = dot(sites[a] - s, sites[a] - s);
            const double dc = dot(sites[c] - s, sites[c] - s);
            return da < dc || (da == dc && a < c);
        });
        std::vector<Point> cell(dom.vertices().begin(), dom.vertices().end());
        for (std::size_t j : order) {
            if (j == i || sites[j] == s) continue;
            double reach = 0.0;
            for (const Point& v : cell) reach = std::max(reach, norm(v - s));
            const Point n = sites[j] - s;
            if (0.5 * norm(n) > reach) break;
            const Point m = s + 0.5 * n;
            cell = clip_half_plane(cell, m, m + Point{-n.y, n.x});
            if (cell.size() < 3) break;
        }
        if (auto c = clip_cell(cell, dom, nominal, eps)) cells.push_back(std::move(*c));
    }
    return cells;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::hex: return "hex";
        case GeneratorKind::square: return "square";
        case GeneratorKind::disk_pack: return "disk_pack";
        case GeneratorKind::two_scale: return "two_scale";
        case GeneratorKind::voronoi: return "voronoi";
    }
    return "unknown";
}

GeneratorKind generator_kind_from_string(std::string_view name) {
    static const std::map<std::string_view, GeneratorKind> kinds{{"hex", GeneratorKind::hex},
                                                                 {"square", GeneratorKind::square},
                                                                 {"disk_pack", GeneratorKind::disk_pack},
                                                                 {"two_scale", GeneratorKind::two_scale},
                                                                 {"voronoi", GeneratorKind::voronoi}};
    const auto it = kinds.find(name);
    if (it == kinds.end()) throw ValidationError("unknown generator kind '" + std::string(name) + "'");
    return it->second;
}

void GeneratorSpec::validate() const {
    if (target_cells == 0) throw ValidationError("generator: target_cells must be at least 1");
    if (!(ratio > 0.0 && ratio <= 1.0)) throw ValidationError("generator: radius ratio must lie in (0, 1]");
    if (domain.components().size() != 1 || !domain.components().front().is_convex(1e-9))
        throw ValidationError("generator: domain must be a single convex polygon");
    if (disk_vertices < 6) throw ValidationError("generator: disk cells need at least 6 vertices");
}

GeneratedPartition generate_with_disks(const GeneratorSpec& spec) {
    spec.validate();
    GeneratedPartition out{Partition(spec.domain, {}), {}};
    switch (spec.kind) {
        case GeneratorKind::hex: out.partition = Partition(spec.domain, hex_cells(spec)); break;
        case GeneratorKind::square: out.partition = Partition(spec.domain, square_cells(spec)); break;
        case GeneratorKind::disk_pack:
        case GeneratorKind::two_scale: out = packing_cells(spec); break;
        case GeneratorKind::voronoi: out.partition = Partition(spec.domain, voronoi_cells(spec)); break;
    }
    if (out.partition.size() == 0) throw ValidationError("generator: no cells fit in the domain");
    return out;
}

Partition generate(const GeneratorSpec& spec) { return generate_with_disks(spec).partition; }

double packing_density(std::span<const Disk> disks, const Region& window) {
    std::vector<std::size_t> order(disks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return disks[a].bounds().lo.x < disks[b].bounds().lo.x; });
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const Disk& a = disks[order[oi]];
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            const Disk& b = disks[order[oj]];
            if (b.bounds().lo.x > a.bounds().hi.x) break;
            const double reach = a.radius() + b.radius();
            if (norm(a.center() - b.center()) < reach - 1e-12 * reach) {
                throw ValidationError("packing_density: disks " + std::to_string(order[oi]) + " and " +
                                      std::to_string(order[oj]) + " overlap");
            }
        }
    }
    double covered = 0.0;
    for (const Disk& d : disks) covered += disk_polygon_intersection_area(d, window);
    return covered / window.area();
}

}  // namespace geoup
