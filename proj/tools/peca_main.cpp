// Command-line front end: run experiments, compile rules to interference
// weights, dump the feasibility census, analyze saved diagrams, and convert
// between diagram formats.

#include "peca/compile.hpp"
#include "peca/diagram_io.hpp"
#include "peca/experiment.hpp"
#include "peca/glider.hpp"
#include "peca/photonic.hpp"
#include "peca/reports.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << text;
    if (text.empty() || text.back() != '\n')
        out << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"elementary cellular automata on a programmable interference model"};
    app.require_subcommand(1);

    // run ------------------------------------------------------------------
    auto* run = app.add_subcommand("run", "run an experiment and write its artifact bundle");
    std::string run_spec_file, run_mode, run_boundary, run_initial, run_format, run_out;
    std::string run_weights, run_analyses, run_fixture_dir;
    int run_rule = -1;
    std::uint64_t run_seed = 0, run_noise_seed = 0;
    std::size_t run_width = 0, run_steps = 0, run_prng_bits = 0;
    double run_threshold = -1.0, run_sigma = -1.0;
    run->add_option("--spec", run_spec_file, "experiment spec file (key=value lines)");
    run->add_option("--mode", run_mode, "table | photonic | emulator");
    run->add_option("--rule", run_rule, "rule number 0..255")->check(CLI::Range(0, 255));
    run->add_option("--weights", run_weights, "explicit weights a-1,a0,a+1");
    run->add_option("--threshold", run_threshold, "explicit detection threshold");
    run->add_option("--width", run_width, "lattice width");
    run->add_option("--steps", run_steps, "number of updates");
    run->add_option("--boundary", run_boundary, "periodic | dead");
    run->add_option("--init", run_initial, "single | random | bits:... | fixture:NAME");
    run->add_option("--seed", run_seed, "seed for random initial conditions");
    run->add_option("--sigma", run_sigma, "amplitude noise standard deviation");
    run->add_option("--noise-seed", run_noise_seed, "noise stream seed");
    run->add_option("--analyses", run_analyses,
                    "comma list: fractal,damage,prng,ether,gliders,extinction");
    run->add_option("--prng-bits", run_prng_bits, "bits for the prng analysis");
    run->add_option("--format", run_format, "pgm | csv | json");
    run->add_option("--out", run_out, "output directory");
    run->add_option("--fixture-dir", run_fixture_dir, "fixture directory override");

    // compile ---------------------------------------------------------------
    auto* compile = app.add_subcommand("compile", "synthesize weights and threshold for a rule");
    int compile_rule_number = 0;
    int compile_grid = 41;
    std::string compile_out;
    compile->add_option("--rule", compile_rule_number, "rule number 0..255")
        ->required()
        ->check(CLI::Range(0, 255));
    compile->add_option("--grid", compile_grid, "grid points per weight axis")
        ->check(CLI::Range(3, 1001));
    compile->add_option("--out", compile_out, "output file (default stdout)");

    // census -----------------------------------------------------------------
    auto* census = app.add_subcommand("census", "feasibility census over all 256 rules");
    int census_grid = 41;
    std::string census_out;
    census->add_option("--grid", census_grid, "grid points per weight axis")
        ->check(CLI::Range(3, 1001));
    census->add_option("--out", census_out, "CSV output file (default stdout)");

    // analyze ----------------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "analyze a saved diagram");
    std::string analyze_in, analyze_kind, analyze_out;
    std::size_t analyze_max_period = 8;
    analyze->add_option("--in", analyze_in, "diagram file (pgm/csv/json)")->required();
    analyze->add_option("--analysis", analyze_kind, "fractal | ether | gliders | extinction")
        ->required();
    analyze->add_option("--max-period", analyze_max_period, "background period bound");
    analyze->add_option("--out", analyze_out, "output file (default stdout)");

    // convert ----------------------------------------------------------------
    auto* convert = app.add_subcommand("convert", "convert a diagram between formats");
    std::string convert_in, convert_out, convert_format;
    convert->add_option("--in", convert_in, "input diagram")->required();
    convert->add_option("--out", convert_out, "output path")->required();
    convert->add_option("--format", convert_format, "pgm | csv | json (default: by extension)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            peca::ExperimentSpec spec;
            if (!run_spec_file.empty())
                spec = peca::parse_spec_file(run_spec_file);
            if (!run_mode.empty())
                peca::apply_spec_assignment(spec, "mode", run_mode);
            if (run->count("--rule"))
                peca::apply_spec_assignment(spec, "rule", std::to_string(run_rule));
            if (!run_weights.empty())
                peca::apply_spec_assignment(spec, "weights", run_weights);
            if (run->count("--threshold"))
                peca::apply_spec_assignment(spec, "threshold", std::to_string(run_threshold));
            if (run->count("--width"))
                spec.width = run_width;
            if (run->count("--steps"))
                spec.steps = run_steps;
            if (!run_boundary.empty())
                peca::apply_spec_assignment(spec, "boundary", run_boundary);
            if (!run_initial.empty()) {
                if (run_initial == "random")
                    run_initial = "random:" + std::to_string(run_seed);
                peca::apply_spec_assignment(spec, "initial", run_initial);
            } else if (run->count("--seed")) {
                peca::apply_spec_assignment(spec, "initial",
                                            "random:" + std::to_string(run_seed));
            }
            if (run->count("--sigma"))
                spec.noise_sigma = run_sigma;
            if (run->count("--noise-seed"))
                spec.noise_seed = run_noise_seed;
            if (!run_analyses.empty())
                peca::apply_spec_assignment(spec, "analyses", run_analyses);
            if (run->count("--prng-bits"))
                spec.prng_bits = run_prng_bits;
            if (!run_format.empty())
                peca::apply_spec_assignment(spec, "format", run_format);
            if (!run_out.empty())
                spec.out_dir = run_out;
            if (!run_fixture_dir.empty())
                spec.fixture_dir = run_fixture_dir;

            const auto result = peca::run_experiment(spec);
            std::cout << "diagram: " << result.diagram_path.string() << '\n';
            for (const auto& path : result.report_paths)
                std::cout << "report: " << path.string() << '\n';
            std::cout << "log: " << result.log_path.string() << '\n';
        } else if (compile->parsed()) {
            const auto result = peca::compile_rule(compile_rule_number, compile_grid);
            emit(peca::to_json_string(result), compile_out);
        } else if (census->parsed()) {
            const auto results = peca::feasibility_census(census_grid);
            emit(peca::census_csv_string(results), census_out);
            std::cerr << peca::count_feasible(results) << " of 256 rules feasible\n";
        } else if (analyze->parsed()) {
            const auto diagram = peca::import_diagram(std::filesystem::path(analyze_in));
            if (analyze_kind == "fractal") {
                const auto sizes = peca::default_box_sizes(
                    std::max<std::size_t>(1, std::min(diagram.row_count(), diagram.width()) / 4));
                emit(peca::to_json_string(peca::box_counting_dimension(diagram, sizes)),
                     analyze_out);
            } else if (analyze_kind == "ether") {
                emit(peca::to_json_string(peca::detect_ether(diagram, analyze_max_period)),
                     analyze_out);
            } else if (analyze_kind == "gliders") {
                const auto ether = peca::detect_ether(diagram, analyze_max_period);
                const auto filtered = peca::filter_ether(diagram, ether);
                const auto events = peca::extract_glider_events(filtered);
                emit(peca::events_json_string(events), analyze_out);
            } else if (analyze_kind == "extinction") {
                const double ratio = peca::extinction_ratio(diagram);
                emit("{\n  \"extinction_ratio\": " + std::to_string(ratio) + "\n}", analyze_out);
            } else {
                throw std::invalid_argument("unknown analysis '" + analyze_kind + "'");
            }
        } else if (convert->parsed()) {
            const auto diagram = peca::import_diagram(std::filesystem::path(convert_in));
            const auto format = convert_format.empty()
                                    ? peca::format_from_path(convert_out)
                                    : peca::format_from_string(convert_format);
            peca::export_diagram(std::filesystem::path(convert_out), diagram, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
