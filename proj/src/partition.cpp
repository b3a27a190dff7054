#include "geoup/partition.hpp"

#include "geoup/parallel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace geoup {

namespace {

double point_segment_distance(Point p, Point a, Point b) {
    const Point d = b - a;
    const double len2 = dot(d, d);
    const double t = len2 > 0.0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
    return norm(p - (a + t * d));
}

bool segments_cross(Point a, Point b, Point c, Point d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

double box_segment_distance(const Box& box, Point a, Point b) {
    if (box.contains(a) || box.contains(b)) return 0.0;
    const Point corners[4] = {box.lo, {box.hi.x, box.lo.y}, box.hi, {box.lo.x, box.hi.y}};
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        const Point c = corners[i];
        const Point e = corners[(i + 1) % 4];
        if (segments_cross(a, b, c, e)) return 0.0;
        best = std::min({best, point_segment_distance(c, a, b), point_segment_distance(a, c, e),
                         point_segment_distance(b, c, e)});
    }
    return best;
}

}  // namespace

Partition::Partition(Region domain, std::vector<Region> cells) : domain_(std::move(domain)), cells_(std::move(cells)) {
    cell_areas_.reserve(cells_.size());
    for (const Region& c : cells_) cell_areas_.push_back(c.area());
}

Partition Partition::transformed(const std::function<Region(const Region&)>& map) const {
    std::vector<Region> out;
    out.reserve(cells_.size());
    for (const Region& c : cells_) out.push_back(map(c));
    return Partition(map(domain_), std::move(out));
}

ValidationReport validate(const Partition& p, const ValidationOptions& opts) {
    ValidationReport report;
    const auto& cells = p.cells();
    const auto& areas = p.cell_areas();
    if (cells.empty()) {
        report.ok = false;
        report.problems.push_back("partition has no cells");
        return report;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!(areas[i] > 0.0)) report.problems.push_back("cell " + std::to_string(i) + " has non-positive area");
        total += areas[i];
    }
    const double domain_area = p.domain().area();
    if (total > domain_area * (1.0 + opts.coverage_tolerance)) {
        report.problems.push_back("cell areas sum to " + std::to_string(total) + ", exceeding the domain area " +
                                  std::to_string(domain_area));
    }

    // Sweep over bounding boxes sorted by their left edge.
    std::vector<std::size_t> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cells[a].bounds().lo.x < cells[b].bounds().lo.x; });
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        const Box& bi = cells[i].bounds();
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            const std::size_t j = order[oj];
            const Box& bj = cells[j].bounds();
            if (bj.lo.x >= bi.hi.x) break;
            const auto overlap_box = bi.intersect(bj);
            if (!overlap_box) continue;
            ++report.pairs_checked;
            const std::uint64_t pair_seed = opts.seed * 0x9E3779B97F4A7C15ull + (std::min(i, j) << 32) + std::max(i, j);
            // Test the cell with fewer vertices first.
            const Region& first = cells[i].vertex_count() <= cells[j].vertex_count() ? cells[i] : cells[j];
            const Region& second = &first == &cells[i] ? cells[j] : cells[i];
            const auto est = monte_carlo_area(
                [&](Point q) { return first.contains(q) && second.contains(q); }, *overlap_box,
                opts.samples_per_pair, pair_seed);
            if (est.value > opts.overlap_tolerance * std::min(areas[i], areas[j])) {
                report.problems.push_back("cells " + std::to_string(std::min(i, j)) + " and " +
                                          std::to_string(std::max(i, j)) + " overlap (estimated area " +
                                          std::to_string(est.value) + ")");
            }
        }
    }
    report.ok = report.problems.empty();
    return report;
}

void require_valid(const Partition& p, const ValidationOptions& opts) {
    const ValidationReport r = validate(p, opts);
    if (r.ok) return;
    std::string msg = "invalid partition:";
    for (const auto& s : r.problems) msg += "\n  " + s;
    throw ValidationError(msg);
}

double deviation(double cell_area, double min_area) {
    if (!(min_area > 0.0)) throw ValidationError("deviation: minimum area must be positive");
    if (cell_area < min_area) throw ValidationError("deviation: cell area is below the supplied minimum");
    return (cell_area - min_area) / cell_area;
}

bool is_interior_cell(const Region& domain, const Region& cell) {
    const Box& b = cell.bounds();
    const double margin = b.diagonal();
    const Point corners[4] = {b.lo, {b.hi.x, b.lo.y}, b.hi, {b.lo.x, b.hi.y}};
    for (const Point& c : corners) {
        if (!domain.contains(c)) return false;
    }
    for (const auto& comp : domain.components()) {
        const auto v = comp.vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (box_segment_distance(b, v[i], v[(i + 1) % v.size()]) < margin) return false;
        }
    }
    return true;
}

PartitionStats aggregate(const std::vector<CellRow>& rows, double total_area, bool interior_only) {
    PartitionStats s;
    s.total_area = total_area;
    s.min_area = std::numeric_limits<double>::infinity();
    for (const CellRow& r : rows) {
        if (interior_only && !r.interior) continue;
        ++s.n_cells;
        s.min_area = std::min(s.min_area, r.area);
    }
    if (s.n_cells == 0) throw ValidationError("no cells carry weight in the functional");
    s.eta0 = std::sqrt(s.min_area / std::numbers::pi);
    for (const CellRow& r : rows) {
        if (interior_only && !r.interior) continue;
        const double w = r.area / total_area;
        s.d_sum += w * r.deviation;
        s.a_sum += w * r.asymmetry;
    }
    s.functional = s.a_sum + s.d_sum;
    return s;
}

FunctionalReport evaluate_functional(const Partition& p, const FunctionalOptions& opts) {
    if (p.size() == 0) throw ValidationError("evaluate_functional: empty partition");
    FunctionalReport report;
    report.interior_only = opts.interior_only;
    report.per_cell.resize(p.size());

    const auto& cells = p.cells();
    const auto& areas = p.cell_areas();
    parallel_for(p.size(), opts.threads, [&](std::size_t i) {
        const AsymmetryResult a = fraenkel_asymmetry(cells[i], opts.asymmetry);
        CellRow& row = report.per_cell[i];
        row.cell_id = i;
        row.area = areas[i];
        row.asymmetry = a.value;
        row.disk = a.disk;
        row.interior = opts.interior_only ? is_interior_cell(p.domain(), cells[i]) : true;
    });

    double weighted_min = std::numeric_limits<double>::infinity();
    double global_min = std::numeric_limits<double>::infinity();
    double weighted_area = 0.0;
    for (const CellRow& r : report.per_cell) {
        global_min = std::min(global_min, r.area);
        if (r.interior) {
            weighted_min = std::min(weighted_min, r.area);
            weighted_area += r.area;
        }
    }
    if (weighted_area == 0.0) throw ValidationError("evaluate_functional: no interior cells");
    // Unweighted boundary rows are reported against the global minimum.
    for (CellRow& r : report.per_cell) r.deviation = deviation(r.area, r.interior ? weighted_min : global_min);

    const double total = opts.interior_only ? weighted_area : p.domain().area();
    report.stats = aggregate(report.per_cell, total, opts.interior_only);
    return report;
}

BigSetLemmaReport check_big_set_lemma(const Partition& p, double c1) {
    if (!(c1 > 0.0)) throw ValidationError("check_big_set_lemma: c1 must be positive");
    if (p.size() == 0) throw ValidationError("check_big_set_lemma: empty partition");
    const auto& areas = p.cell_areas();
    const double omega = p.domain().area();
    const double min_area = *std::min_element(areas.begin(), areas.end());

    BigSetLemmaReport r;
    r.c1 = c1;
    for (double a : areas) {
        r.d2 += (a / omega) * deviation(a, min_area);
        if (a > (1.0 + c1) * min_area) r.big_measure += a / omega;
    }
    r.bound = r.d2 / c1 + r.d2;
    r.holds = r.big_measure <= r.bound + 1e-12 * (1.0 + r.bound);
    return r;
}

AsymmetryMassReport asymmetry_mass_lemma_check(const FunctionalReport& report, double c) {
    AsymmetryMassReport r;
    r.c = c;
    r.a_sum = report.stats.a_sum;
    r.bound = c / 6.0;
    r.applicable = r.a_sum >= c / 2.0;
    for (const CellRow& row : report.per_cell) {
        if (report.interior_only && !row.interior) continue;
        if (row.asymmetry >= c / 6.0) r.qualifying_measure += row.area / report.stats.total_area;
    }
    r.holds = !r.applicable || r.qualifying_measure >= r.bound - 1e-12;
    return r;
}

AsymmetryMassReport asymmetry_mass_lemma_check(const Partition& p, double c, const FunctionalOptions& opts) {
    return asymmetry_mass_lemma_check(evaluate_functional(p, opts), c);
}

}  // namespace geoup
