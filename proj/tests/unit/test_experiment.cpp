#include "peca/experiment.hpp"

#include "peca/diagram_io.hpp"

#include "doctest.h"

#include <stdexcept>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace peca;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("peca-test-" + std::to_string(std::rand()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("spec files parse and flags override") {
    TempDir tmp;
    const auto spec_path = tmp.path / "exp.spec";
    {
        std::ofstream out(spec_path);
        out << "# comment line\n"
            << "mode=table\n"
            << "rule = 90\n"
            << "width=65\n"
            << "steps=32\n"
            << "boundary=dead\n"
            << "initial=single\n"
            << "format=csv\n";
    }
    auto spec = parse_spec_file(spec_path);
    CHECK(spec.mode == RunMode::Table);
    CHECK(spec.rule == 90);
    CHECK(spec.width == 65);
    CHECK(spec.steps == 32);
    CHECK(spec.format == DiagramFormat::Csv);

    apply_spec_assignment(spec, "steps", "16");
    CHECK(spec.steps == 16);

    CHECK_THROWS_AS(apply_spec_assignment(spec, "nonsense", "1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_spec_assignment(spec, "rule", "300"), std::invalid_argument);
    CHECK_THROWS_AS(apply_spec_assignment(spec, "initial", "moonphase"), std::invalid_argument);
}

TEST_CASE("initial condition grammar") {
    CHECK(InitialSpec::parse("single").kind == InitialSpec::Kind::SingleSeed);
    const auto random = InitialSpec::parse("random:99");
    CHECK(random.kind == InitialSpec::Kind::RandomWithSeed);
    CHECK(random.seed == 99);
    const auto bits = InitialSpec::parse("bits:0101");
    CHECK(bits.kind == InitialSpec::Kind::ExplicitBits);
    CHECK(bits.bits == "0101");
    const auto fixture = InitialSpec::parse("fixture:rule54-ether");
    CHECK(fixture.kind == InitialSpec::Kind::Fixture);
    CHECK(fixture.fixture == "rule54-ether");
    CHECK_THROWS_AS(InitialSpec::parse("bits:"), std::invalid_argument);
}

TEST_CASE("a table run writes a deterministic bundle") {
    TempDir tmp;
    ExperimentSpec spec;
    spec.mode = RunMode::Table;
    spec.rule = 90;
    spec.width = 129;
    spec.steps = 64;
    spec.initial.kind = InitialSpec::Kind::SingleSeed;
    spec.format = DiagramFormat::Csv;
    spec.out_dir = tmp.path / "a";
    const auto first = run_experiment(spec);
    CHECK(fs::exists(first.diagram_path));
    CHECK(fs::exists(first.log_path));

    spec.out_dir = tmp.path / "b";
    const auto second = run_experiment(spec);
    CHECK(slurp(first.diagram_path) == slurp(second.diagram_path));

    const auto diagram = import_diagram(first.diagram_path);
    CHECK(diagram.row_count() == 65);
    CHECK(diagram.width() == 129);
}

TEST_CASE("a rule 0 run goes dark after the first step") {
    TempDir tmp;
    ExperimentSpec spec;
    spec.mode = RunMode::Table;
    spec.rule = 0;
    spec.width = 33;
    spec.steps = 4;
    spec.initial = InitialSpec::parse("random:5");
    spec.format = DiagramFormat::Csv;
    spec.out_dir = tmp.path;
    const auto result = run_experiment(spec);
    const auto diagram = import_diagram(result.diagram_path);
    for (std::size_t t = 1; t <= 4; ++t)
        CHECK(diagram.row(t).live_count() == 0);
}

TEST_CASE("photonic runs compile the requested rule and record intensities") {
    TempDir tmp;
    ExperimentSpec spec;
    spec.mode = RunMode::Photonic;
    spec.rule = 90;
    spec.width = 65;
    spec.steps = 32;
    spec.initial.kind = InitialSpec::Kind::SingleSeed;
    spec.format = DiagramFormat::Json;
    spec.out_dir = tmp.path;
    spec.analyses = {"fractal", "extinction"};
    const auto result = run_experiment(spec);
    const auto diagram = import_diagram(result.diagram_path);
    CHECK(diagram.has_intensities());
    CHECK(fs::exists(tmp.path / "fractal.json"));
    CHECK(fs::exists(tmp.path / "extinction.json"));
}

TEST_CASE("infeasible rules in photonic mode point at the census") {
    TempDir tmp;
    ExperimentSpec spec;
    spec.mode = RunMode::Photonic;
    spec.rule = 255;
    spec.width = 17;
    spec.steps = 4;
    spec.out_dir = tmp.path;
    try {
        run_experiment(spec);
        FAIL("expected an error for the infeasible rule");
    } catch (const std::runtime_error& e) {
        const std::string message = e.what();
        CHECK(message.find("census") != std::string::npos);
    }
}

TEST_CASE("emulator runs write a trace and match the photonic diagram") {
    TempDir tmp;
    ExperimentSpec spec;
    spec.mode = RunMode::Emulator;
    spec.rule = 30;
    spec.width = 65;
    spec.steps = 16;
    spec.initial.kind = InitialSpec::Kind::SingleSeed;
    spec.format = DiagramFormat::Json;
    spec.out_dir = tmp.path;
    const auto result = run_experiment(spec);
    CHECK(fs::exists(tmp.path / "trace.jsonl"));
    const auto diagram = import_diagram(result.diagram_path);
    CHECK(diagram.steps() == 16);
    CHECK(diagram.has_intensities());
}

TEST_CASE("unknown analyses and missing fixtures fail loudly") {
    TempDir tmp;
    ExperimentSpec spec;
    spec.mode = RunMode::Table;
    spec.rule = 90;
    spec.width = 33;
    spec.steps = 8;
    spec.out_dir = tmp.path;
    spec.analyses = {"horoscope"};
    CHECK_THROWS_AS(run_experiment(spec), std::invalid_argument);

    spec.analyses.clear();
    spec.initial = InitialSpec::parse("fixture:no-such-thing");
    spec.fixture_dir = tmp.path;
    CHECK_THROWS_AS(run_experiment(spec), std::runtime_error);
}

TEST_CASE("damage analysis writes report and difference diagram") {
    TempDir tmp;
    ExperimentSpec spec;
    spec.mode = RunMode::Table;
    spec.rule = 30;
    spec.width = 257;
    spec.steps = 64;
    spec.initial = InitialSpec::parse("random:7");
    spec.format = DiagramFormat::Csv;
    spec.out_dir = tmp.path;
    spec.analyses = {"damage"};
    run_experiment(spec);
    CHECK(fs::exists(tmp.path / "damage.json"));
    CHECK(fs::exists(tmp.path / "difference.csv"));
    const auto text = slurp(tmp.path / "damage.json");
    CHECK(text.find("lambda_right") != std::string::npos);
}
