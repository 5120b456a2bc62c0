// kdecomp command line: estimate complexities, verify decomposition
// inequalities, run the light-cone study and its complexity filters.
//
// Exit codes: 0 success, 1 decomposition lower bound violated, 2 bad
// input or arguments, 3 unknown backend, 4 empty causal region.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kdecomp/backend.hpp"
#include "kdecomp/codec.hpp"
#include "kdecomp/decomposition.hpp"
#include "kdecomp/error.hpp"
#include "kdecomp/estimator.hpp"
#include "kdecomp/generate.hpp"
#include "kdecomp/io.hpp"
#include "kdecomp/json_reports.hpp"
#include "kdecomp/lightcone.hpp"
#include "kdecomp/manifest.hpp"
#include "kdecomp/svg.hpp"
#include "kdecomp/version.hpp"

namespace {

using namespace kdecomp;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBoundViolated = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnknownBackend = 3;
constexpr int kExitEmptyRegion = 4;

struct CommonOptions {
    std::string backend_id = "zlib";
    int level = -1;  // backend default

    CompressorBackend backend() const { return make_backend(backend_id, level); }
};

void add_backend_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--backend", opts.backend_id, "compressor backend id")
        ->envname("KDECOMP_BACKEND")
        ->capture_default_str();
    cmd->add_option("--level", opts.level, "compression level (backend default when omitted)");
}

struct InputOptions {
    std::string input_path;
    std::string generate;
    std::uint64_t seed = 0;
    bool skip_header = false;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
    cmd->add_option("input", opts.input_path, "dataset file (CSV, or JSON array-of-arrays)");
    cmd->add_option("--generate", opts.generate,
                    "generator spec instead of a file: constant:2^20, alternating:2^20, "
                    "random:2^20, hypercube:n=100,m=3000, curve:n=100");
    cmd->add_option("--seed", opts.seed, "seed for seeded generators")->capture_default_str();
    cmd->add_flag("--header", opts.skip_header, "skip one CSV header line");
}

TupleDataset load_input(const InputOptions& opts) {
    if (!opts.generate.empty() && !opts.input_path.empty()) {
        throw ParseError("give either an input file or --generate, not both");
    }
    if (!opts.generate.empty()) {
        return generate_from_spec(opts.generate, opts.seed);
    }
    if (opts.input_path.empty()) {
        throw ParseError("no input: give a dataset file or --generate");
    }
    return read_dataset_file(opts.input_path, opts.skip_header);
}

ordered_json input_parameters(const InputOptions& opts) {
    ordered_json p;
    if (!opts.input_path.empty()) p["input"] = opts.input_path;
    if (!opts.generate.empty()) p["generate"] = opts.generate;
    p["seed"] = opts.seed;
    if (opts.skip_header) p["header"] = true;
    return p;
}

RunManifest make_manifest(std::string command, ordered_json parameters,
                          const CompressorBackend& backend, std::string_view input_payload) {
    parameters["backend"] = backend.id;
    parameters["level"] = backend.level;
    RunManifest m;
    m.command = std::move(command);
    m.parameters = std::move(parameters);
    m.version = kVersion;
    m.input_hash = hash_hex(input_payload);
    return m;
}

void emit(const ordered_json& report) {
    std::cout << report.dump(2) << "\n";
}

std::vector<double> parse_number_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string field = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            values.push_back(std::stod(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw ParseError(std::string("bad ") + what + " '" + field + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

int run_estimate(const CommonOptions& common, const InputOptions& input) {
    CompressorBackend backend = common.backend();
    TupleDataset dataset = load_input(input);
    EncodedBlob blob = encode(dataset);

    ComplexityEstimate est = estimate_blob(blob, backend);
    ordered_json out;
    out["manifest"] =
        to_json(make_manifest("estimate", input_parameters(input), backend, blob.payload));
    out.update(to_json(est));
    emit(out);
    return kExitOk;
}

struct DecomposeOptions {
    std::string coeffs;
    std::string slack;
    double program_bound = -1.0;
};

int run_decompose(const CommonOptions& common, const InputOptions& input,
                  const DecomposeOptions& opts) {
    CompressorBackend backend = common.backend();
    TupleDataset dataset = load_input(input);
    EncodedBlob blob = encode(dataset);

    DecompositionConfig config;
    if (!opts.coeffs.empty()) config.coefficients = parse_number_list(opts.coeffs, "coefficient");
    if (!opts.slack.empty()) {
        auto parts = parse_number_list(opts.slack, "slack constant");
        if (parts.size() != 2) throw ParseError("--slack expects two values c1,c2");
        config.slack_c1 = parts[0];
        config.slack_c2 = parts[1];
    }
    if (opts.program_bound >= 0) config.program_bound = opts.program_bound;

    DecompositionReport report = verify_decomposition(dataset, config, backend);

    ordered_json params = input_parameters(input);
    if (!opts.coeffs.empty()) params["coeffs"] = config.coefficients;
    params["slack_c1"] = config.slack_c1;
    params["slack_c2"] = config.slack_c2;
    if (config.program_bound) params["program_bound"] = *config.program_bound;

    ordered_json out;
    out["manifest"] = to_json(make_manifest("decompose", std::move(params), backend, blob.payload));
    out.update(to_json(report));
    emit(out);
    return report.lower_ok ? kExitOk : kExitBoundViolated;
}

struct LightconeOptions {
    std::size_t m = 40000;
    std::uint64_t seed = 0;
    std::string epsilon = "0";
    std::string regions = "full,inside,outside";
    std::string plot_dir;
};

void add_cloud_options(CLI::App* cmd, LightconeOptions& opts) {
    cmd->add_option("--m", opts.m, "probe count")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "cloud seed")->capture_default_str();
    cmd->add_option("--epsilon", opts.epsilon, "half-width of the on-cone band")
        ->capture_default_str();
}

constexpr std::array<std::pair<const char*, std::array<std::size_t, 2>>, 6> kPlotPairs{{
    {"xy", {0, 1}},
    {"xz", {0, 2}},
    {"xt", {0, 3}},
    {"yz", {1, 2}},
    {"yt", {1, 3}},
    {"zt", {2, 3}},
}};

void write_region_plots(const std::filesystem::path& dir, const ProbeCloud& cloud,
                        const CausalRegion& region) {
    std::filesystem::create_directories(dir);
    TupleDataset points = region_subset(cloud, region);
    for (const auto& [name, cols] : kPlotPairs) {
        std::filesystem::path file =
            dir / (std::string(to_string(region.tag)) + "_" + name + ".svg");
        std::ofstream out(file, std::ios::binary);
        if (!out) throw ParseError("cannot write plot file " + file.string());
        write_scatter_svg(out, points, cols[0], cols[1], std::string_view(name).substr(0, 1),
                          std::string_view(name).substr(1, 1));
    }
}

int run_lightcone(const CommonOptions& common, const LightconeOptions& opts) {
    CompressorBackend backend = common.backend();
    QuantizedScalar epsilon = QuantizedScalar::parse(opts.epsilon);
    if (epsilon.micros() < 0) throw ArgumentError("epsilon must be non-negative");

    std::vector<RegionTag> tags;
    std::size_t start = 0;
    while (start <= opts.regions.size()) {
        auto comma = opts.regions.find(',', start);
        tags.push_back(region_tag_from_string(opts.regions.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }

    ProbeCloud cloud = generate_cloud(opts.m, opts.seed);

    ordered_json params;
    params["m"] = opts.m;
    params["seed"] = opts.seed;
    params["epsilon"] = epsilon.render();
    params["regions"] = opts.regions;
    if (!opts.plot_dir.empty()) params["plot"] = opts.plot_dir;

    ordered_json reports = ordered_json::array();
    for (RegionTag tag : tags) {
        CausalRegion region{tag, epsilon};
        reports.push_back(to_json(study(cloud, region, backend)));
        if (!opts.plot_dir.empty()) {
            write_region_plots(opts.plot_dir, cloud, region);
        }
    }

    ordered_json out;
    out["manifest"] = to_json(
        make_manifest("lightcone", std::move(params), backend, encode(cloud.points).payload));
    out["reports"] = std::move(reports);
    emit(out);
    return kExitOk;
}

struct FilterOptions {
    std::string mode;
    std::uint64_t threshold = 0;
};

int run_filter(const CommonOptions& common, const LightconeOptions& lc,
               const FilterOptions& opts) {
    CompressorBackend backend = common.backend();
    QuantizedScalar epsilon = QuantizedScalar::parse(lc.epsilon);
    if (opts.mode != "low" && opts.mode != "high") {
        throw ParseError("--mode must be low or high");
    }

    ProbeCloud cloud = generate_cloud(lc.m, lc.seed);
    FilterOutcome outcome = opts.mode == "high"
                                ? highpass_filter(cloud, epsilon, opts.threshold, backend)
                                : lowpass_filter(cloud, epsilon, opts.threshold, backend);

    ordered_json params;
    params["mode"] = opts.mode;
    params["threshold"] = opts.threshold;
    params["m"] = lc.m;
    params["seed"] = lc.seed;
    params["epsilon"] = epsilon.render();

    ordered_json out;
    out["manifest"] = to_json(
        make_manifest("filter", std::move(params), backend, encode(cloud.points).payload));
    out.update(to_json(outcome));
    emit(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compression-based complexity estimation, decomposition checks and the "
                 "light-cone study"};
    app.set_version_flag("--version", kdecomp::kVersion);
    app.require_subcommand(1);

    CommonOptions common;
    InputOptions input;
    DecomposeOptions decompose_opts;
    LightconeOptions lightcone_opts;
    FilterOptions filter_opts;

    CLI::App* estimate_cmd =
        app.add_subcommand("estimate", "approximate the complexity of a dataset");
    add_backend_options(estimate_cmd, common);
    add_input_options(estimate_cmd, input);

    CLI::App* decompose_cmd = app.add_subcommand(
        "decompose", "verify the projection decomposition inequalities on a dataset");
    add_backend_options(decompose_cmd, common);
    add_input_options(decompose_cmd, input);
    decompose_cmd->add_option("--coeffs", decompose_opts.coeffs,
                              "comma-separated non-zero coefficients, one per column");
    decompose_cmd->add_option("--slack", decompose_opts.slack,
                              "slack constants c1,c2 (default 8,64)");
    decompose_cmd->add_option("--program-bound", decompose_opts.program_bound,
                              "program upper bound M in bytes; enables the upper inequality");

    CLI::App* lightcone_cmd =
        app.add_subcommand("lightcone", "study causal regions of a probe cloud");
    add_backend_options(lightcone_cmd, common);
    add_cloud_options(lightcone_cmd, lightcone_opts);
    lightcone_cmd
        ->add_option("--regions", lightcone_opts.regions, "comma-separated regions to study")
        ->capture_default_str();
    lightcone_cmd->add_option("--plot", lightcone_opts.plot_dir,
                              "directory for per-region scatter plots (SVG)");

    CLI::App* filter_cmd =
        app.add_subcommand("filter", "pass causal regions through a complexity filter");
    add_backend_options(filter_cmd, common);
    add_cloud_options(filter_cmd, lightcone_opts);
    filter_cmd->add_option("--mode", filter_opts.mode, "low or high")->required();
    filter_cmd->add_option("--threshold", filter_opts.threshold, "threshold in bytes")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (estimate_cmd->parsed()) return run_estimate(common, input);
        if (decompose_cmd->parsed()) return run_decompose(common, input, decompose_opts);
        if (lightcone_cmd->parsed()) return run_lightcone(common, lightcone_opts);
        if (filter_cmd->parsed()) return run_filter(common, lightcone_opts, filter_opts);
    } catch (const kdecomp::RegistryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownBackend;
    } catch (const kdecomp::EmptyRegionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmptyRegion;
    } catch (const kdecomp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
