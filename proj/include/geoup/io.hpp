#pragma once

// File formats: Region / Partition JSON, functional report CSV + JSON
// aggregate, certificate JSON, generator specs, and SVG rendering.

#include "geoup/asymmetry.hpp"
#include "geoup/certificate.hpp"
#include "geoup/generators.hpp"
#include "geoup/partition.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geoup::io {

using json = nlohmann::ordered_json;

/// Malformed input; `what()` carries a "source:line:column: message" diagnostic.
class FormatError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `%.12g` rendering used by every text output.
std::string format_number(double value);

/// Rounds to 12 significant digits so JSON output matches the text formatting.
double round12(double value);

/// Parses JSON text; syntax errors become FormatError with line and column.
json parse_json(std::string_view text, std::string_view source);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// `{"components": [[[x,y], ...], ...]}`.
Region region_from_json(const json& j, std::string_view source = "<region>");
json region_to_json(const Region& r);

/// `{"domain": <Region>, "cells": [<Region>, ...]}`.
Partition partition_from_json(const json& j, std::string_view source = "<partition>");
json partition_to_json(const Partition& p);

Region load_region(const std::filesystem::path& path);
Partition load_partition(const std::filesystem::path& path);

/// `{"kind": "hex", "target_cells": 400, "seed": 0, "ratio": 1, "domain": <Region>}`;
/// every field but `kind` is optional.
GeneratorSpec generator_spec_from_json(const json& j, std::string_view source = "<spec>");
json generator_spec_to_json(const GeneratorSpec& spec);

json asymmetry_to_json(const AsymmetryResult& r);

/// Header `cell_id,area,asymmetry,deviation,disk_cx,disk_cy,disk_r`.
std::string functional_csv(const FunctionalReport& report);
json functional_aggregate_json(const FunctionalReport& report);

json certificate_to_json(const certificate::CertificateReport& report);

/// SVG of the partition cells; Fraenkel disks overlaid when `report` is given.
std::string render_svg(const Partition& p, const FunctionalReport* report = nullptr);

}  // namespace geoup::io
