#include "geoup/cli.hpp"

#include "geoup/asymmetry.hpp"
#include "geoup/certificate.hpp"
#include "geoup/generators.hpp"
#include "geoup/io.hpp"
#include "geoup/parallel.hpp"
#include "geoup/partition.hpp"
#include "geoup/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>

namespace geoup::cli {

namespace {

using io::format_number;
using io::json;

struct RunConfig {
    std::string input_path;
    std::string output_path;
    std::string format;
    std::uint64_t seed = 0;
    unsigned threads = default_thread_count();
    std::size_t samples = 500;  // Monte Carlo samples per cell pair during validation
    std::size_t starts = AsymmetryOptions{}.max_starts;
    bool disks = false;
    bool interior_only = false;

    // generate
    std::string kind = "hex";
    std::size_t cells = 400;
    double ratio = 1.0;
    std::string domain_path;
    std::string spec_path;

    // certify / optimize
    double c1 = 1.0 / 250.0;
    double c2 = 7.0 / 250.0;
    double c = 1.0 / 60000.0;
    std::size_t grid = 60;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output_path.empty()) {
        out << text;
    } else {
        io::write_file(cfg.output_path, text);
    }
}

AsymmetryOptions asymmetry_options(const RunConfig& cfg) {
    AsymmetryOptions o;
    o.max_starts = cfg.starts;
    return o;
}

FunctionalOptions functional_options(const RunConfig& cfg) {
    FunctionalOptions o;
    o.asymmetry = asymmetry_options(cfg);
    o.threads = cfg.threads;
    o.interior_only = cfg.interior_only;
    return o;
}

void validate_or_throw(const Partition& p, const RunConfig& cfg) {
    ValidationOptions v;
    v.samples_per_pair = cfg.samples;
    v.seed = cfg.seed;
    require_valid(p, v);
}

void run_asym(const RunConfig& cfg, std::ostream& out) {
    const Region r = io::load_region(cfg.input_path);
    const AsymmetryResult res = fraenkel_asymmetry(r, asymmetry_options(cfg));
    if (cfg.format == "json") {
        emit(cfg, out, io::asymmetry_to_json(res).dump(2) + "\n");
        return;
    }
    std::string text;
    text += "asymmetry   " + format_number(res.value) + "\n";
    text += "disk_center " + format_number(res.disk.center().x) + " " + format_number(res.disk.center().y) + "\n";
    text += "disk_radius " + format_number(res.disk.radius()) + "\n";
    text += "evaluations " + std::to_string(res.evaluations) + "\n";
    text += std::string("converged   ") + (res.converged ? "true" : "false") + "\n";
    emit(cfg, out, text);
}

void run_eval(const RunConfig& cfg, std::ostream& out) {
    const Partition p = io::load_partition(cfg.input_path);
    validate_or_throw(p, cfg);
    const FunctionalReport report = evaluate_functional(p, functional_options(cfg));
    const json aggregate = io::functional_aggregate_json(report);
    if (cfg.format == "json") {
        json doc;
        doc["aggregate"] = aggregate;
        json rows = json::array();
        for (const CellRow& r : report.per_cell) {
            json row;
            row["cell_id"] = r.cell_id;
            row["area"] = io::round12(r.area);
            row["asymmetry"] = io::round12(r.asymmetry);
            row["deviation"] = io::round12(r.deviation);
            row["disk_cx"] = io::round12(r.disk.center().x);
            row["disk_cy"] = io::round12(r.disk.center().y);
            row["disk_r"] = io::round12(r.disk.radius());
            rows.push_back(std::move(row));
        }
        doc["cells"] = std::move(rows);
        emit(cfg, out, doc.dump(2) + "\n");
        return;
    }
    const std::string csv = io::functional_csv(report);
    if (cfg.output_path.empty()) {
        out << csv << "\n" << aggregate.dump(2) << "\n";
    } else {
        // CSV to --out, aggregate block next to it.
        io::write_file(cfg.output_path, csv);
        std::filesystem::path agg(cfg.output_path);
        agg.replace_extension(".json");
        io::write_file(agg, aggregate.dump(2) + "\n");
    }
}

void run_generate(const RunConfig& cfg, std::ostream& out) {
    GeneratorSpec spec;
    if (!cfg.spec_path.empty()) {
        const std::string text = io::read_file(cfg.spec_path);
        spec = io::generator_spec_from_json(io::parse_json(text, cfg.spec_path), cfg.spec_path);
    } else {
        spec.kind = generator_kind_from_string(cfg.kind);
        spec.target_cells = cfg.cells;
        spec.seed = cfg.seed;
        spec.ratio = cfg.ratio;
        if (!cfg.domain_path.empty()) spec.domain = io::load_region(cfg.domain_path);
    }
    const Partition p = generate(spec);
    emit(cfg, out, io::partition_to_json(p).dump() + "\n");
}

void run_certify(const RunConfig& cfg, std::ostream& out) {
    if (!(cfg.c >= 0.0)) throw ValidationError("--c must be non-negative");
    const certificate::ProofParams worst = certificate::worst_split(cfg.c1, cfg.c2, cfg.c);
    const certificate::CertificateReport report = certificate::evaluate_chain(worst);
    const certificate::CertifiedConstant cert = certificate::certify_constant(cfg.c1, cfg.c2);
    const certificate::LensCheck lens = certificate::lens_lower_bound_check(cfg.c2);

    json doc = io::certificate_to_json(report);
    doc["c"] = io::round12(cfg.c);
    doc["target"] = io::round12(certificate::blind_density() + 1.0 / 1000.0);
    doc["lens_value"] = io::round12(lens.lens_value);
    doc["lens_bound"] = io::round12(lens.bound_value);
    doc["pair_neighborhood_factor"] = io::round12(certificate::pair_neighborhood_factor());
    doc["neighborhood_amplification"] = io::round12(certificate::neighborhood_amplification(cfg.c1));
    doc["c_max"] = io::round12(cert.c_max);
    if (!cert.diagnostic.empty()) doc["diagnostic"] = cert.diagnostic;

    if (cfg.format == "text") {
        std::string text;
        for (const auto& [key, value] : doc.items()) {
            if (key == "params") {
                for (const auto& [pk, pv] : value.items()) text += pk + " " + pv.dump() + "\n";
            } else {
                text += key + " " + value.dump() + "\n";
            }
        }
        emit(cfg, out, text);
        return;
    }
    emit(cfg, out, doc.dump(2) + "\n");
}

void run_optimize(const RunConfig& cfg, std::ostream& out) {
    if (cfg.grid < 1) throw ValidationError("--grid must be at least 1");
    certificate::SearchGrid grid;
    const int n = static_cast<int>(cfg.grid);
    for (int i = 0; i < n; ++i) {
        grid.c1_values.push_back(n == 1 ? 1.0 / 250.0 : std::pow(10.0, -4.0 + 4.0 * i / (n - 1)));
        grid.c2_values.push_back(n == 1 ? 7.0 / 250.0 : 0.05 * (i + 1) / n);
    }
    const auto best = certificate::optimize_parameters(grid);
    json doc;
    doc["c1"] = io::round12(best.c1);
    doc["c2"] = io::round12(best.c2);
    doc["c"] = io::round12(best.c);
    doc["grid_best"] = io::round12(best.grid_best);
    doc["reference_point_c"] = io::round12(certificate::certify_constant(1.0 / 250.0, 7.0 / 250.0).c_max);
    if (cfg.format == "text") {
        std::string text;
        for (const auto& [key, value] : doc.items()) text += key + " " + value.dump() + "\n";
        emit(cfg, out, text);
        return;
    }
    emit(cfg, out, doc.dump(2) + "\n");
}

void run_pleijel(const RunConfig& cfg, std::ostream& out) {
    const auto sc = spectral::SpectralConstants::compute();
    const std::vector<std::pair<std::string, double>> rows{
        {"bessel_j0_first_zero", sc.bessel_j},
        {"pleijel_limit", sc.pleijel_limit},
        {"hexagonal_obstruction", spectral::hexagonal_obstruction()},
        {"blind_density", certificate::blind_density()},
        {"pi_j_squared", spectral::lambda1_disk(1.0)},
        {"bourgain_improvement", spectral::kBourgainImprovement},
    };
    std::string text;
    if (cfg.format == "csv") {
        text = "name,value\n";
        for (const auto& [name, value] : rows) text += name + "," + format_number(value) + "\n";
    } else {
        std::size_t width = 0;
        for (const auto& row : rows) width = std::max(width, row.first.size());
        for (const auto& [name, value] : rows) text += name + std::string(width + 2 - name.size(), ' ') + format_number(value) + "\n";
    }
    emit(cfg, out, text);
}

void run_render(const RunConfig& cfg, std::ostream& out) {
    const Partition p = io::load_partition(cfg.input_path);
    std::optional<FunctionalReport> report;
    if (cfg.disks) report = evaluate_functional(p, functional_options(cfg));
    emit(cfg, out, io::render_svg(p, report ? &*report : nullptr));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Geometric uncertainty toolkit: Fraenkel asymmetry, partition functionals, proof-constant checks"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Random seed");
        sub->add_option("--out", cfg.output_path, "Output file (default: stdout)");
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--samples", cfg.samples, "Monte Carlo samples per cell pair for validation")
            ->check(CLI::PositiveNumber);
        sub->add_option("--starts", cfg.starts, "Optimizer starts refined per cell")->check(CLI::PositiveNumber);
    };

    auto* asym = app.add_subcommand("asym", "Fraenkel asymmetry of a region file");
    asym->add_option("input", cfg.input_path, "Region JSON")->required();
    asym->add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    common(asym);

    auto* eval = app.add_subcommand("eval", "Evaluate the asymmetry + deviation functional of a partition");
    eval->add_option("input", cfg.input_path, "Partition JSON")->required();
    eval->add_option("--format", cfg.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    eval->add_flag("--interior-only", cfg.interior_only, "Weight interior cells only");
    common(eval);

    auto* gen = app.add_subcommand("generate", "Write a generated partition");
    gen->add_option("--kind", cfg.kind, "hex|square|disk_pack|two_scale|voronoi");
    gen->add_option("--cells", cfg.cells, "Target cell count")->check(CLI::PositiveNumber);
    gen->add_option("--ratio", cfg.ratio, "Small/large radius ratio (two_scale)");
    gen->add_option("--domain", cfg.domain_path, "Domain region JSON (default: unit square)");
    gen->add_option("--spec", cfg.spec_path, "Generator spec JSON (overrides the flags)");
    common(gen);

    auto* cert = app.add_subcommand("certify", "Evaluate the inequality chain at (c1, c2, c)");
    cert->add_option("--c1", cfg.c1, "Big-cell threshold");
    cert->add_option("--c2", cfg.c2, "Overlap threshold, in (0, 0.05]");
    cert->add_option("--c", cfg.c, "Functional budget d1 + d2");
    cert->add_option("--format", cfg.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    cert->add_option("--out", cfg.output_path, "Output file (default: stdout)");

    auto* opt = app.add_subcommand("optimize", "Search (c1, c2) for the largest certifiable constant");
    opt->add_option("--grid", cfg.grid, "Grid points per axis")->check(CLI::PositiveNumber);
    opt->add_option("--format", cfg.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    opt->add_option("--out", cfg.output_path, "Output file (default: stdout)");

    auto* ple = app.add_subcommand("pleijel", "Print spectral constants");
    ple->add_option("--format", cfg.format, "text|csv")->check(CLI::IsMember({"text", "csv"}));
    ple->add_option("--out", cfg.output_path, "Output file (default: stdout)");

    auto* ren = app.add_subcommand("render", "Write an SVG of a partition");
    ren->add_option("input", cfg.input_path, "Partition JSON")->required();
    ren->add_flag("--disks", cfg.disks, "Overlay Fraenkel disks");
    common(ren);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidationFailure;
    }

    try {
        if (asym->parsed()) run_asym(cfg, out);
        else if (eval->parsed()) run_eval(cfg, out);
        else if (gen->parsed()) run_generate(cfg, out);
        else if (cert->parsed()) run_certify(cfg, out);
        else if (opt->parsed()) run_optimize(cfg, out);
        else if (ple->parsed()) run_pleijel(cfg, out);
        else if (ren->parsed()) run_render(cfg, out);
    } catch (const io::IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kOk;
}

}  // namespace geoup::cli
