#include "geoup/asymmetry.hpp"

#include "geoup/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

namespace geoup {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Point> start_points(const Region& r, std::size_t grid) {
    std::vector<Point> starts{r.centroid()};
    const Box& b = r.bounds();
    for (std::size_t j = 0; j < grid; ++j) {
        for (std::size_t i = 0; i < grid; ++i) {
            const double fx = (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
            const double fy = (static_cast<double>(j) + 0.5) / static_cast<double>(grid);
            starts.push_back({b.lo.x + fx * b.width(), b.lo.y + fy * b.height()});
        }
    }
    return starts;
}

struct Candidate {
    std::vector<double> x;
    double value;
    std::size_t start_index;
};

// Ranks starts by initial objective (stable, so equal values keep start
// order), drops starts with no overlap at all unless nothing else exists,
// and keeps at most `max_starts`.
std::vector<Candidate> rank_starts(std::vector<Candidate> starts, std::size_t max_starts) {
    std::stable_sort(starts.begin(), starts.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    const bool any_overlap = !starts.empty() && starts.front().value < 2.0 - 1e-12;
    if (any_overlap) {
        std::erase_if(starts, [](const Candidate& c) { return c.value >= 2.0 - 1e-12; });
    }
    if (starts.size() > std::max<std::size_t>(1, max_starts)) starts.resize(std::max<std::size_t>(1, max_starts));
    return starts;
}

// Refines each candidate and reduces with a lowest-start-index tie-break.
// A refinement never returns a worse point than its start.
template <class Objective>
Candidate refine_all(const std::vector<Candidate>& ranked, const Objective& objective,
                     const std::vector<double>& step, const NelderMeadSettings& nm, std::size_t& evaluations) {
    Candidate best = ranked.front();
    bool first = true;
    for (const Candidate& start : ranked) {
        const NelderMeadResult res = nelder_mead(objective, start.x, step, nm);
        evaluations += res.evaluations;
        Candidate refined = res.value <= start.value ? Candidate{res.x, res.value, start.start_index} : start;
        if (first || refined.value < best.value ||
            (refined.value == best.value && refined.start_index < best.start_index)) {
            best = std::move(refined);
            first = false;
        }
    }
    return best;
}

}  // namespace

double fraenkel_objective(const Region& r, Point center) {
    const double a = r.area();
    const Disk disk(center, std::sqrt(a / kPi));
    return std::clamp(symmetric_difference_area(disk, r) / a, 0.0, 2.0);
}

AsymmetryResult fraenkel_asymmetry(const Region& r, const AsymmetryOptions& opts) {
    const double area = r.area();
    if (!(area > 0.0)) throw ValidationError("fraenkel_asymmetry: region has zero area");
    const double radius = std::sqrt(area / kPi);
    const double diameter = r.bounds().diagonal();

    std::size_t evaluations = 0;
    auto objective = [&](const std::vector<double>& x) { return fraenkel_objective(r, {x[0], x[1]}); };

    std::vector<Candidate> starts;
    const auto points = start_points(r, opts.grid);
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<double> x{points[i].x, points[i].y};
        starts.push_back({x, objective(x), i});
        ++evaluations;
    }
    const auto ranked = rank_starts(std::move(starts), opts.max_starts);

    NelderMeadSettings nm;
    nm.max_evaluations = opts.evaluations_per_start;
    nm.x_tolerance = 1e-8 * diameter;
    nm.f_tolerance = 1e-13;
    const double step = 0.5 * radius;
    const Candidate best = refine_all(ranked, objective, {step, step}, nm, evaluations);

    // Polishing pass from the incumbent; its displacement decides convergence.
    const NelderMeadResult polish = nelder_mead(objective, best.x, {0.05 * radius, 0.05 * radius}, nm);
    evaluations += polish.evaluations;
    std::vector<double> x = best.x;
    double value = best.value;
    if (polish.value < value) {
        x = polish.x;
        value = polish.value;
    }
    const double moved = std::hypot(polish.x[0] - best.x[0], polish.x[1] - best.x[1]);

    AsymmetryResult result;
    result.value = std::clamp(value, 0.0, 2.0);
    result.disk = Disk({x[0], x[1]}, radius);
    result.evaluations = evaluations;
    result.converged = moved < opts.tolerance * diameter;
    return result;
}

BodyTemplate::BodyTemplate(const Region& shape, std::string name)
    : shape_(shape.components().front()), name_(std::move(name)) {
    if (shape.components().size() != 1) throw ValidationError("body template must be a single polygon");
    if (!shape_.is_convex(1e-9)) throw ValidationError("body template '" + name_ + "' is not convex");

    const Point c = shape_.centroid();
    const double s = 1.0 / std::sqrt(shape_.area());
    shape_ = shape_.transformed([&](Point p) { return s * (p - c); });

    const std::size_t n = shape_.size();
    for (std::size_t m = std::min(n, max_order); m >= 2; --m) {
        if (n % m != 0) continue;
        const double angle = 2.0 * kPi / static_cast<double>(m);
        const SimplePolygon turned = shape_.transformed([&](Point p) { return rotate(p, angle); });
        const double overlap = intersection_area_with_convex(Region(shape_), turned);
        if (2.0 - 2.0 * overlap <= 1e-6) {
            symmetry_order_ = m;
            break;
        }
    }
}

SimplePolygon BodyTemplate::placed(Point center, double angle, double area) const {
    const double s = std::sqrt(area);
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    return shape_.transformed([&](Point p) {
        return Point{center.x + s * (c * p.x - sn * p.y), center.y + s * (sn * p.x + c * p.y)};
    });
}

double generalized_objective(const Region& r, const BodyTemplate& k, Point center, double angle) {
    const double a = r.area();
    const SimplePolygon body = k.placed(center, angle, a);
    const double overlap = intersection_area_with_convex(r, body);
    return std::clamp((2.0 * a - 2.0 * overlap) / a, 0.0, 2.0);
}

GeneralizedAsymmetryResult generalized_asymmetry(const Region& r, const BodyTemplate& k,
                                                 const AsymmetryOptions& opts) {
    const double area = r.area();
    if (!(area > 0.0)) throw ValidationError("generalized_asymmetry: region has zero area");
    const double scale = std::sqrt(area);
    const double diameter = r.bounds().diagonal();
    const double period = 2.0 * kPi / static_cast<double>(k.symmetry_order());

    std::size_t evaluations = 0;
    auto objective = [&](const std::vector<double>& x) { return generalized_objective(r, k, {x[0], x[1]}, x[2]); };

    std::vector<Candidate> starts;
    const auto points = start_points(r, opts.grid);
    const std::size_t n_angles = std::max<std::size_t>(1, opts.angle_starts);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t a = 0; a < n_angles; ++a) {
            std::vector<double> x{points[i].x, points[i].y,
                                  period * static_cast<double>(a) / static_cast<double>(n_angles)};
            starts.push_back({x, objective(x), i * n_angles + a});
            ++evaluations;
        }
    }
    const auto ranked = rank_starts(std::move(starts), opts.max_starts);

    NelderMeadSettings nm;
    nm.max_evaluations = opts.evaluations_per_start;
    nm.x_tolerance = 1e-8 * diameter;
    nm.f_tolerance = 1e-13;
    const std::vector<double> step{0.3 * scale, 0.3 * scale, 0.5 * period / static_cast<double>(n_angles)};
    const Candidate best = refine_all(ranked, objective, step, nm, evaluations);

    const std::vector<double> fine{0.02 * scale, 0.02 * scale, 0.02 * period};
    const NelderMeadResult polish = nelder_mead(objective, best.x, fine, nm);
    evaluations += polish.evaluations;
    std::vector<double> x = best.x;
    double value = best.value;
    if (polish.value < value) {
        x = polish.x;
        value = polish.value;
    }
    const double moved = std::hypot(polish.x[0] - best.x[0], polish.x[1] - best.x[1]);

    GeneralizedAsymmetryResult result;
    result.value = std::clamp(value, 0.0, 2.0);
    result.center = {x[0], x[1]};
    result.angle = std::fmod(std::fmod(x[2], period) + period, period);
    result.evaluations = evaluations;
    result.converged = moved < opts.tolerance * diameter;
    return result;
}

}  // namespace geoup
