#include "peca/experiment.hpp"

#include "peca/compile.hpp"
#include "peca/damage.hpp"
#include "peca/emulator.hpp"
#include "peca/evolve.hpp"
#include "peca/fractal.hpp"
#include "peca/glider.hpp"
#include "peca/randomness.hpp"
#include "peca/reports.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace peca {

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
    try {
        std::size_t used = 0;
        const std::string buf(text);
        const unsigned long long value = std::stoull(buf, &used);
        if (used != buf.size())
            throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("cannot parse ") + what + " from '" +
                                    std::string(text) + "'");
    }
}

double parse_double(std::string_view text, const char* what) {
    try {
        std::size_t used = 0;
        const std::string buf(text);
        const double value = std::stod(buf, &used);
        if (used != buf.size())
            throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("cannot parse ") + what + " from '" +
                                    std::string(text) + "'");
    }
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> items;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t comma = text.find(',', begin);
        const std::string_view item =
            text.substr(begin, comma == std::string_view::npos ? std::string_view::npos
                                                               : comma - begin);
        if (!item.empty())
            items.emplace_back(item);
        if (comma == std::string_view::npos)
            break;
        begin = comma + 1;
    }
    return items;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!text.empty() && text.back() != '\n')
        out << '\n';
    out.flush();
    if (!out)
        throw std::runtime_error("write to '" + path.string() + "' failed");
}

} // namespace

RunMode run_mode_from_string(std::string_view name) {
    if (name == "table")
        return RunMode::Table;
    if (name == "photonic")
        return RunMode::Photonic;
    if (name == "emulator")
        return RunMode::Emulator;
    throw std::invalid_argument("unknown mode '" + std::string(name) +
                                "' (expected table, photonic, or emulator)");
}

const char* to_string(RunMode m) noexcept {
    switch (m) {
    case RunMode::Table: return "table";
    case RunMode::Photonic: return "photonic";
    case RunMode::Emulator: return "emulator";
    }
    return "?";
}

InitialSpec InitialSpec::parse(std::string_view text) {
    InitialSpec spec;
    if (text == "single") {
        spec.kind = Kind::SingleSeed;
        return spec;
    }
    if (text.rfind("random:", 0) == 0) {
        spec.kind = Kind::RandomWithSeed;
        spec.seed = parse_u64(text.substr(7), "random seed");
        return spec;
    }
    if (text.rfind("bits:", 0) == 0) {
        spec.kind = Kind::ExplicitBits;
        spec.bits = std::string(text.substr(5));
        if (spec.bits.empty())
            throw std::invalid_argument("bits: initial condition is empty");
        return spec;
    }
    if (text.rfind("fixture:", 0) == 0) {
        spec.kind = Kind::Fixture;
        spec.fixture = std::string(text.substr(8));
        if (spec.fixture.empty())
            throw std::invalid_argument("fixture: initial condition names no fixture");
        return spec;
    }
    throw std::invalid_argument("unknown initial condition '" + std::string(text) +
                                "' (expected single, random:SEED, bits:..., or fixture:NAME)");
}

std::string InitialSpec::to_string() const {
    switch (kind) {
    case Kind::SingleSeed: return "single";
    case Kind::RandomWithSeed: return "random:" + std::to_string(seed);
    case Kind::ExplicitBits: return "bits:" + bits;
    case Kind::Fixture: return "fixture:" + fixture;
    }
    return "?";
}

void apply_spec_assignment(ExperimentSpec& spec, std::string_view key, std::string_view value) {
    if (key == "mode") {
        spec.mode = run_mode_from_string(value);
    } else if (key == "rule") {
        const auto n = parse_u64(value, "rule number");
        if (n > 255)
            throw std::invalid_argument("rule number must be in 0..255");
        spec.rule = static_cast<int>(n);
    } else if (key == "weights") {
        const auto parts = split_list(value);
        if (parts.size() != 3)
            throw std::invalid_argument("weights must be three comma-separated values");
        PhotonicConfig cfg = spec.explicit_config.value_or(PhotonicConfig{});
        cfg.weights = {parse_double(parts[0], "weight"), parse_double(parts[1], "weight"),
                       parse_double(parts[2], "weight")};
        spec.explicit_config = cfg;
    } else if (key == "threshold") {
        PhotonicConfig cfg = spec.explicit_config.value_or(PhotonicConfig{});
        cfg.threshold = parse_double(value, "threshold");
        spec.explicit_config = cfg;
    } else if (key == "width") {
        spec.width = parse_u64(value, "width");
    } else if (key == "steps") {
        spec.steps = parse_u64(value, "steps");
    } else if (key == "boundary") {
        spec.boundary = boundary_from_string(value);
    } else if (key == "initial") {
        spec.initial = InitialSpec::parse(value);
    } else if (key == "sigma") {
        spec.noise_sigma = parse_double(value, "noise sigma");
    } else if (key == "noise_seed") {
        spec.noise_seed = parse_u64(value, "noise seed");
    } else if (key == "grid") {
        spec.grid_steps = static_cast<int>(parse_u64(value, "grid steps"));
    } else if (key == "prng_bits") {
        spec.prng_bits = parse_u64(value, "prng bits");
    } else if (key == "analyses") {
        spec.analyses = split_list(value);
    } else if (key == "format") {
        spec.format = format_from_string(value);
    } else if (key == "out") {
        spec.out_dir = std::string(value);
    } else if (key == "fixture_dir") {
        spec.fixture_dir = std::string(value);
    } else {
        throw std::invalid_argument("unknown experiment key '" + std::string(key) + "'");
    }
}

ExperimentSpec parse_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open spec file '" + path.string() + "'");
    ExperimentSpec spec;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto eq = line.find('=', first);
        if (eq == std::string::npos)
            throw std::invalid_argument("spec line " + std::to_string(line_no) +
                                        " is not key=value: '" + line + "'");
        auto strip = [](std::string_view s) {
            const auto b = s.find_first_not_of(" \t");
            if (b == std::string_view::npos)
                return std::string_view{};
            const auto e = s.find_last_not_of(" \t");
            return s.substr(b, e - b + 1);
        };
        const auto key = strip(std::string_view(line).substr(first, eq - first));
        const auto value = strip(std::string_view(line).substr(eq + 1));
        try {
            apply_spec_assignment(spec, key, value);
        } catch (const std::exception& e) {
            throw std::invalid_argument("spec line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return spec;
}

std::filesystem::path resolve_fixture_dir(const ExperimentSpec& spec) {
    if (!spec.fixture_dir.empty())
        return spec.fixture_dir;
    if (const char* env = std::getenv("PECA_FIXTURE_DIR"); env != nullptr && *env != '\0')
        return env;
    return "fixtures";
}

Generation load_fixture_initial(const std::filesystem::path& fixture_dir,
                                const std::string& name) {
    const auto path = fixture_dir / (name + ".json");
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("fixture '" + name + "' not found at " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("fixture '" + name + "' is not valid JSON: " + e.what());
    }
    try {
        const auto bits = j.at("bits").get<std::string>();
        const auto boundary = boundary_from_string(j.at("boundary").get<std::string>());
        auto g = Generation::from_string(bits, boundary);
        if (j.contains("width") && j.at("width").get<std::size_t>() != g.width())
            throw std::runtime_error("fixture width field disagrees with its bits");
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("fixture '" + name + "' is malformed: " + e.what());
    }
}

namespace {

Generation build_initial(const ExperimentSpec& spec) {
    switch (spec.initial.kind) {
    case InitialSpec::Kind::SingleSeed:
        return Generation::single_seed(spec.width, spec.boundary);
    case InitialSpec::Kind::RandomWithSeed:
        return Generation::random(spec.width, spec.initial.seed, spec.boundary);
    case InitialSpec::Kind::ExplicitBits:
        return Generation::from_string(spec.initial.bits, spec.boundary);
    case InitialSpec::Kind::Fixture:
        return load_fixture_initial(resolve_fixture_dir(spec), spec.initial.fixture);
    }
    throw std::logic_error("unreachable initial kind");
}

PhotonicConfig resolve_config(const ExperimentSpec& spec) {
    PhotonicConfig cfg;
    if (spec.explicit_config) {
        cfg = *spec.explicit_config;
    } else {
        if (!spec.rule)
            throw std::invalid_argument("photonic and emulator modes need a rule or weights");
        const auto result = compile_rule(*spec.rule, spec.grid_steps);
        if (!result.feasible)
            throw std::runtime_error(
                "rule " + std::to_string(*spec.rule) +
                " is not realizable as interference weights plus a threshold; "
                "see the feasibility census (`peca census`) for the rules that are");
        cfg = *result.config;
    }
    cfg.noise.amplitude_sigma = spec.noise_sigma;
    cfg.noise.seed = spec.noise_seed;
    validate(cfg);
    return cfg;
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    if (spec.mode == RunMode::Table && !spec.rule)
        throw std::invalid_argument("table mode needs a rule number");
    if (spec.mode == RunMode::Table && spec.explicit_config)
        throw std::invalid_argument("table mode takes a rule number, not weights");

    const Generation initial = build_initial(spec);
    std::filesystem::create_directories(spec.out_dir);

    ExperimentResult result;
    std::ostringstream log;
    log << "mode=" << to_string(spec.mode) << '\n';
    if (spec.rule)
        log << "rule=" << *spec.rule << '\n';
    log << "width=" << initial.width() << '\n'
        << "steps=" << spec.steps << '\n'
        << "boundary=" << to_string(initial.boundary()) << '\n'
        << "initial=" << spec.initial.to_string() << '\n';

    SpaceTimeDiagram diagram;
    switch (spec.mode) {
    case RunMode::Table: {
        diagram = evolve(initial, RuleTable::from_number(*spec.rule), spec.steps);
        break;
    }
    case RunMode::Photonic: {
        const auto cfg = resolve_config(spec);
        log << "weights=" << cfg.weights.left << ',' << cfg.weights.center << ','
            << cfg.weights.right << '\n'
            << "threshold=" << cfg.threshold << '\n'
            << "sigma=" << cfg.noise.amplitude_sigma << '\n';
        diagram = photonic_evolve(initial, cfg, spec.steps);
        break;
    }
    case RunMode::Emulator: {
        const auto cfg = resolve_config(spec);
        PulseTrainConfig train;
        train.num_pulses = initial.width();
        train.optics = cfg;
        const auto trace = run_loop(initial, train, spec.steps);
        log << "iteration_latency_ns=" << trace.iteration_latency_ns().to_string() << '\n';
        if (!trace.iterations.empty()) {
            const auto throughput = throughput_report(trace);
            log << "modeled_updates_per_second=" << throughput.modeled_updates_per_second << '\n';
        }
        const auto trace_path = spec.out_dir / "trace.jsonl";
        std::ofstream trace_out(trace_path);
        if (!trace_out)
            throw std::runtime_error("cannot open '" + trace_path.string() + "' for writing");
        write_trace_jsonl(trace_out, trace);
        result.report_paths.push_back(trace_path);
        diagram = trace_to_diagram(trace);
        break;
    }
    }

    result.diagram_path = spec.out_dir / (std::string("diagram") + extension(spec.format));
    export_diagram(result.diagram_path, diagram, spec.format);
    log << "diagram=" << result.diagram_path.string() << '\n';

    for (const auto& analysis : spec.analyses) {
        if (analysis == "fractal") {
            const auto sizes =
                default_box_sizes(std::max<std::size_t>(1, std::min(diagram.row_count(),
                                                                    diagram.width()) /
                                                               4));
            const auto report = box_counting_dimension(diagram, sizes);
            const auto path = spec.out_dir / "fractal.json";
            write_text_file(path, to_json_string(report));
            result.report_paths.push_back(path);
            log << "fractal.dimension=" << report.dimension << '\n';
        } else if (analysis == "damage") {
            if (!spec.rule)
                throw std::invalid_argument("damage analysis needs a rule number");
            const auto report = damage_spreading(RuleTable::from_number(*spec.rule), initial,
                                                 initial.width() / 2, spec.steps);
            const auto path = spec.out_dir / "damage.json";
            write_text_file(path, to_json_string(report));
            result.report_paths.push_back(path);
            const auto diff_path =
                spec.out_dir / (std::string("difference") + extension(spec.format));
            export_diagram(diff_path, report.difference, spec.format);
            result.report_paths.push_back(diff_path);
            log << "damage.lambda_right=" << report.lambda_right
                << " damage.lambda_left=" << report.lambda_left << '\n';
        } else if (analysis == "prng") {
            if (!spec.rule)
                throw std::invalid_argument("prng analysis needs a rule number");
            const std::size_t n_bits = spec.prng_bits > 0 ? spec.prng_bits : spec.steps;
            const auto bits =
                middle_column_bits(RuleTable::from_number(*spec.rule), initial, n_bits);
            const auto report = randomness_battery(bits);
            const auto path = spec.out_dir / "prng.json";
            write_text_file(path, to_json_string(report));
            result.report_paths.push_back(path);
            log << "prng.monobit_z=" << report.monobit_z << '\n';
        } else if (analysis == "ether") {
            const auto ether = detect_ether(diagram);
            const auto path = spec.out_dir / "ether.json";
            write_text_file(path, to_json_string(ether));
            result.report_paths.push_back(path);
            log << "ether=" << ether.spatial_period << 'x' << ether.temporal_period
                << " coverage=" << ether.coverage << '\n';
        } else if (analysis == "gliders") {
            const auto ether = detect_ether(diagram);
            const auto filtered = filter_ether(diagram, ether);
            const auto filtered_path =
                spec.out_dir / (std::string("filtered") + extension(spec.format));
            export_diagram(filtered_path, filtered, spec.format);
            result.report_paths.push_back(filtered_path);
            const auto events = extract_glider_events(filtered);
            const auto path = spec.out_dir / "gliders.json";
            write_text_file(path, events_json_string(events));
            result.report_paths.push_back(path);
            log << "glider_events=" << events.size() << '\n';
        } else if (analysis == "extinction") {
            const double ratio = extinction_ratio(diagram);
            const auto path = spec.out_dir / "extinction.json";
            nlohmann::json j;
            j["extinction_ratio"] = ratio;
            write_text_file(path, j.dump(2));
            result.report_paths.push_back(path);
            log << "extinction_ratio=" << ratio << '\n';
        } else {
            throw std::invalid_argument("unknown analysis '" + analysis +
                                        "' (expected fractal, damage, prng, ether, gliders, "
                                        "or extinction)");
        }
    }

    result.log_path = spec.out_dir / "run.log";
    write_text_file(result.log_path, log.str());
    return result;
}

} // namespace peca
