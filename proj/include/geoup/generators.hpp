#pragma once

// Canonical and adversarial partitions: hexagonal and square tilings,
// disk packings with interstitial cells, and clipped Poisson–Voronoi cells.

#include "geoup/geometry.hpp"
#include "geoup/partition.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geoup {

enum class GeneratorKind { hex, square, disk_pack, two_scale, voronoi };

std::string_view to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(std::string_view name);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::hex;
    std::size_t target_cells = 100;
    Region domain{rectangle({0.0, 0.0}, {1.0, 1.0})};
    std::uint64_t seed = 0;
    double ratio = 1.0;                 // small/large radius for two_scale
    std::size_t disk_vertices = 1024;   // base vertex count of disk cells

    /// Throws ValidationError on target_cells == 0, ratio ∉ (0, 1], or a nonconvex domain.
    void validate() const;
};

struct GeneratedPartition {
    Partition partition;
    std::vector<Disk> disks;  // exact disks behind the disk cells (packings only)
};

/// Builds the partition described by `spec`; cells are clipped to the domain.
GeneratedPartition generate_with_disks(const GeneratorSpec& spec);
Partition generate(const GeneratorSpec& spec);

/// Σ |disk ∩ window| / |window| for pairwise disjoint disks.
double packing_density(std::span<const Disk> disks, const Region& window);

}  // namespace geoup
