#pragma once

// Partition data model, deviation, and the asymmetry-plus-deviation functional.

#include "geoup/asymmetry.hpp"
#include "geoup/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geoup {

class Partition {
public:
    /// Stores the cells and caches their areas; disjointness is checked by `validate`.
    Partition(Region domain, std::vector<Region> cells);

    const Region& domain() const { return domain_; }
    const std::vector<Region>& cells() const { return cells_; }
    const std::vector<double>& cell_areas() const { return cell_areas_; }
    std::size_t size() const { return cells_.size(); }

    /// Applies the same map (a similarity) to the domain and every cell.
    Partition transformed(const std::function<Region(const Region&)>& map) const;

private:
    Region domain_;
    std::vector<Region> cells_;
    std::vector<double> cell_areas_;
};

struct ValidationOptions {
    double overlap_tolerance = 1e-6;        // pairwise overlap, relative to the smaller cell
    double coverage_tolerance = 1e-6;       // Σ cell areas ≤ domain area × (1 + tol)
    std::size_t samples_per_pair = 500;
    std::uint64_t seed = 0;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
    std::size_t pairs_checked = 0;
};

/// Checks positive cell areas, the area budget, and statistical pairwise
/// disjointness on every pair of cells whose bounding boxes overlap.
ValidationReport validate(const Partition& p, const ValidationOptions& opts = {});

/// Throws ValidationError listing the problems when `validate` fails.
void require_valid(const Partition& p, const ValidationOptions& opts = {});

/// (cell_area − min_area) / cell_area.
double deviation(double cell_area, double min_area);

struct CellRow {
    std::size_t cell_id = 0;
    double area = 0.0;
    double asymmetry = 0.0;
    double deviation = 0.0;
    Disk disk{{0.0, 0.0}, 1.0};
    bool interior = true;
};

struct PartitionStats {
    std::size_t n_cells = 0;
    double min_area = 0.0;
    double eta0 = 0.0;      // π η0² = min_area
    double total_area = 0.0;  // |Ω| used for the weights
    double d_sum = 0.0;
    double a_sum = 0.0;
    double functional = 0.0;
};

struct FunctionalReport {
    PartitionStats stats;
    std::vector<CellRow> per_cell;  // every cell, in index order
    bool interior_only = false;
};

struct FunctionalOptions {
    AsymmetryOptions asymmetry;
    /// Weight interior cells only (bounding box at least one cell diameter
    /// from the domain boundary); weights are then normalized by the
    /// interior area and the minimum is taken over interior cells.
    bool interior_only = false;
    unsigned threads = 1;
};

/// True when the cell's bounding box lies inside the domain at distance
/// at least its own diagonal from the domain boundary.
bool is_interior_cell(const Region& domain, const Region& cell);

FunctionalReport evaluate_functional(const Partition& p, const FunctionalOptions& opts = {});

/// Recomputes the aggregate block from per-cell rows. Rows must already
/// carry deviations relative to the minimum over the weighted rows.
PartitionStats aggregate(const std::vector<CellRow>& rows, double total_area, bool interior_only);

struct BigSetLemmaReport {
    double c1 = 0.0;
    double d2 = 0.0;            // Σ w_i D_i
    double big_measure = 0.0;   // |∪{Ω_i : |Ω_i| > (1+c1) π η0²}| / |Ω|
    double bound = 0.0;         // d2/c1 + d2
    bool holds = false;
};

/// Measure of the "big" cells versus the d2/c1 + d2 bound, with |Ω| normalized to 1.
BigSetLemmaReport check_big_set_lemma(const Partition& p, double c1);

struct AsymmetryMassReport {
    double c = 0.0;
    double a_sum = 0.0;
    bool applicable = false;      // a_sum ≥ c/2
    double qualifying_measure = 0.0;  // |∪{Ω_i : 𝒜(Ω_i) ≥ c/6}| / |Ω|
    double bound = 0.0;           // c/6
    bool holds = true;
};

/// Whenever a_sum ≥ c/2, the cells with 𝒜 ≥ c/6 carry at least a c/6 share of |Ω|.
AsymmetryMassReport asymmetry_mass_lemma_check(const FunctionalReport& report, double c);
AsymmetryMassReport asymmetry_mass_lemma_check(const Partition& p, double c, const FunctionalOptions& opts = {});

}  // namespace geoup
