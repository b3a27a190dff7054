#include "geoup/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace geoup::io {

namespace {

[[noreturn]] void fail(std::string_view source, const std::string& where, const std::string& message) {
    throw FormatError(std::string(source) + ": " + where + ": " + message);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

double number_at(const json& j, std::string_view source, const std::string& where) {
    if (!j.is_number()) fail(source, where, "expected a number");
    return j.get<double>();
}

SimplePolygon polygon_from_json(const json& j, std::string_view source, const std::string& where) {
    if (!j.is_array()) fail(source, where, "expected an array of [x, y] vertices");
    std::vector<Point> pts;
    pts.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "/" + std::to_string(i);
        const json& v = j[i];
        if (!v.is_array() || v.size() != 2) fail(source, at, "expected an [x, y] pair");
        pts.push_back({number_at(v[0], source, at + "/0"), number_at(v[1], source, at + "/1")});
    }
    try {
        return SimplePolygon(std::move(pts));
    } catch (const ValidationError& e) {
        fail(source, where, e.what());
    }
}

json polygon_to_json(const SimplePolygon& p) {
    json out = json::array();
    for (const Point& v : p.vertices()) out.push_back(json::array({v.x, v.y}));
    return out;
}

std::string svg_path(const Region& r, double top) {
    std::string d;
    for (const auto& c : r.components()) {
        bool first = true;
        for (const Point& v : c.vertices()) {
            d += first ? "M" : "L";
            d += format_number(v.x) + " " + format_number(top - v.y) + " ";
            first = false;
        }
        d += "Z ";
    }
    if (!d.empty()) d.pop_back();
    return d;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

double round12(double value) { return std::stod(format_number(value)); }

json parse_json(std::string_view text, std::string_view source) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::string msg = e.what();
        // Strip the library prefix "[json.exception.parse_error.101] parse error at line L, column C: ".
        if (const auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
        throw FormatError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << contents;
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

Region region_from_json(const json& j, std::string_view source) {
    if (!j.is_object() || !j.contains("components")) fail(source, "/", "expected an object with \"components\"");
    const json& comps = j["components"];
    if (!comps.is_array() || comps.empty()) fail(source, "/components", "expected a non-empty array of polygons");
    std::vector<SimplePolygon> polys;
    for (std::size_t i = 0; i < comps.size(); ++i)
        polys.push_back(polygon_from_json(comps[i], source, "/components/" + std::to_string(i)));
    return Region(std::move(polys));
}

json region_to_json(const Region& r) {
    json comps = json::array();
    for (const auto& c : r.components()) comps.push_back(polygon_to_json(c));
    json out;
    out["components"] = std::move(comps);
    return out;
}

Partition partition_from_json(const json& j, std::string_view source) {
    if (!j.is_object()) fail(source, "/", "expected an object with \"domain\" and \"cells\"");
    if (!j.contains("domain")) fail(source, "/", "missing \"domain\"");
    if (!j.contains("cells") || !j["cells"].is_array()) fail(source, "/", "missing \"cells\" array");
    const std::string src(source);
    Region domain = region_from_json(j["domain"], src + " (domain)");
    std::vector<Region> cells;
    const json& cj = j["cells"];
    for (std::size_t i = 0; i < cj.size(); ++i)
        cells.push_back(region_from_json(cj[i], src + " (cell " + std::to_string(i) + ")"));
    return Partition(std::move(domain), std::move(cells));
}

json partition_to_json(const Partition& p) {
    json out;
    out["domain"] = region_to_json(p.domain());
    json cells = json::array();
    for (const Region& c : p.cells()) cells.push_back(region_to_json(c));
    out["cells"] = std::move(cells);
    return out;
}

Region load_region(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    return region_from_json(parse_json(text, path.string()), path.string());
}

Partition load_partition(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    return partition_from_json(parse_json(text, path.string()), path.string());
}

GeneratorSpec generator_spec_from_json(const json& j, std::string_view source) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(source, "/", "expected an object with a string \"kind\"");
    GeneratorSpec spec;
    try {
        spec.kind = generator_kind_from_string(j["kind"].get<std::string>());
    } catch (const ValidationError& e) {
        fail(source, "/kind", e.what());
    }
    if (j.contains("target_cells")) {
        const json& t = j["target_cells"];
        if (!t.is_number_integer() || t.get<long long>() < 1) fail(source, "/target_cells", "expected a positive integer");
        spec.target_cells = t.get<std::size_t>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) fail(source, "/seed", "expected an integer");
        spec.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("ratio")) spec.ratio = number_at(j["ratio"], source, "/ratio");
    if (j.contains("disk_vertices")) {
        if (!j["disk_vertices"].is_number_integer()) fail(source, "/disk_vertices", "expected an integer");
        spec.disk_vertices = j["disk_vertices"].get<std::size_t>();
    }
    if (j.contains("domain")) spec.domain = region_from_json(j["domain"], std::string(source) + " (domain)");
    return spec;
}

json generator_spec_to_json(const GeneratorSpec& spec) {
    json out;
    out["kind"] = std::string(to_string(spec.kind));
    out["target_cells"] = spec.target_cells;
    out["seed"] = spec.seed;
    out["ratio"] = spec.ratio;
    out["disk_vertices"] = spec.disk_vertices;
    out["domain"] = region_to_json(spec.domain);
    return out;
}

json asymmetry_to_json(const AsymmetryResult& r) {
    json out;
    out["value"] = round12(r.value);
    out["disk_cx"] = round12(r.disk.center().x);
    out["disk_cy"] = round12(r.disk.center().y);
    out["disk_r"] = round12(r.disk.radius());
    out["evaluations"] = r.evaluations;
    out["converged"] = r.converged;
    return out;
}

std::string functional_csv(const FunctionalReport& report) {
    std::string out = "cell_id,area,asymmetry,deviation,disk_cx,disk_cy,disk_r\n";
    for (const CellRow& row : report.per_cell) {
        out += std::to_string(row.cell_id) + "," + format_number(row.area) + "," + format_number(row.asymmetry) + "," +
               format_number(row.deviation) + "," + format_number(row.disk.center().x) + "," +
               format_number(row.disk.center().y) + "," + format_number(row.disk.radius()) + "\n";
    }
    return out;
}

json functional_aggregate_json(const FunctionalReport& report) {
    const PartitionStats& s = report.stats;
    json out;
    out["n_cells"] = s.n_cells;
    out["min_area"] = round12(s.min_area);
    out["eta0"] = round12(s.eta0);
    out["total_area"] = round12(s.total_area);
    out["a_sum"] = round12(s.a_sum);
    out["d_sum"] = round12(s.d_sum);
    out["functional"] = round12(s.functional);
    out["interior_only"] = report.interior_only;
    return out;
}

json certificate_to_json(const certificate::CertificateReport& r) {
    json params;
    params["c1"] = round12(r.params.c1);
    params["c2"] = round12(r.params.c2);
    params["d1"] = round12(r.params.d1);
    params["d2"] = round12(r.params.d2);
    json out;
    out["params"] = std::move(params);
    out["big_set_bound"] = round12(r.big_set_bound);
    out["neighborhood_bound"] = round12(r.neighborhood_bound);
    out["overlap_bound"] = round12(r.overlap_bound);
    out["pair_neighborhood_bound"] = round12(r.pair_neighborhood_bound);
    out["lhs"] = round12(r.lhs);
    out["blind_density"] = round12(r.blind_density);
    out["margin"] = round12(r.margin);
    out["contradiction"] = r.contradiction;
    return out;
}

std::string render_svg(const Partition& p, const FunctionalReport* report) {
    Box b = p.domain().bounds();
    for (const Region& c : p.cells()) {
        const Box& cb = c.bounds();
        b = {{std::min(b.lo.x, cb.lo.x), std::min(b.lo.y, cb.lo.y)}, {std::max(b.hi.x, cb.hi.x), std::max(b.hi.y, cb.hi.y)}};
    }
    const double margin = 0.05 * std::max(b.width(), b.height());
    const Box view = b.expanded(margin);
    // SVG's y axis points down; mirror about the top of the view box.
    const double top = view.hi.y;
    const double stroke = 0.002 * std::max(view.width(), view.height());

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + format_number(view.lo.x) + " 0 " +
           format_number(view.width()) + " " + format_number(view.height()) + "\">\n";
    out += "  <path class=\"domain\" d=\"" + svg_path(p.domain(), top) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
           format_number(2.0 * stroke) + "\"/>\n";
    out += "  <g class=\"cells\" fill=\"#dde6f0\" stroke=\"#34495e\" stroke-width=\"" + format_number(stroke) + "\">\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += "    <path id=\"cell-" + std::to_string(i) + "\" d=\"" + svg_path(p.cells()[i], top) + "\"/>\n";
    out += "  </g>\n";
    if (report != nullptr) {
        out += "  <g class=\"disks\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" + format_number(stroke) + "\">\n";
        for (const CellRow& row : report->per_cell) {
            out += "    <circle cx=\"" + format_number(row.disk.center().x) + "\" cy=\"" +
                   format_number(top - row.disk.center().y) + "\" r=\"" + format_number(row.disk.radius()) + "\"/>\n";
        }
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace geoup::io
