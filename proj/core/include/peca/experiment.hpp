#pragma once

#include "peca/diagram_io.hpp"
#include "peca/generation.hpp"
#include "peca/photonic.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace peca {

enum class RunMode { Table, Photonic, Emulator };

RunMode run_mode_from_string(std::string_view name);
const char* to_string(RunMode m) noexcept;

struct InitialSpec {
    enum class Kind { SingleSeed, RandomWithSeed, ExplicitBits, Fixture };
    Kind kind = Kind::SingleSeed;
    std::uint64_t seed = 0;  ///< RandomWithSeed
    std::string bits;        ///< ExplicitBits
    std::string fixture;     ///< Fixture name

    /// "single" | "random:SEED" | "bits:0101..." | "fixture:NAME"
    static InitialSpec parse(std::string_view text);
    std::string to_string() const;
};

/// A complete, reproducible experiment description. Spec files are
/// line-oriented key=value text; command-line flags override file values.
struct ExperimentSpec {
    RunMode mode = RunMode::Table;
    std::optional<int> rule;
    std::optional<PhotonicConfig> explicit_config; ///< instead of a rule number
    std::size_t width = 257;
    std::size_t steps = 128;
    Boundary boundary = Boundary::FixedDead;
    InitialSpec initial;
    double noise_sigma = 0.0;
    std::uint64_t noise_seed = 0;
    int grid_steps = 41;
    std::size_t prng_bits = 0; ///< 0: default to `steps`
    std::vector<std::string> analyses;
    DiagramFormat format = DiagramFormat::Json;
    std::filesystem::path out_dir = ".";
    std::filesystem::path fixture_dir; ///< empty: $PECA_FIXTURE_DIR, then "fixtures"
};

ExperimentSpec parse_spec_file(const std::filesystem::path& path);

/// Apply one key=value assignment (the spec-file grammar). Throws
/// std::invalid_argument for unknown keys or unparsable values.
void apply_spec_assignment(ExperimentSpec& spec, std::string_view key, std::string_view value);

/// Resolve the fixture directory: explicit field, $PECA_FIXTURE_DIR, or
/// "fixtures".
std::filesystem::path resolve_fixture_dir(const ExperimentSpec& spec);

/// Load a fixture initial condition: a JSON file {"width", "boundary",
/// "bits", ...} under the fixture directory.
Generation load_fixture_initial(const std::filesystem::path& fixture_dir,
                                const std::string& name);

struct ExperimentResult {
    std::filesystem::path diagram_path;
    std::vector<std::filesystem::path> report_paths;
    std::filesystem::path log_path;
};

/// Run the experiment and write the artifact bundle (diagram, one report per
/// requested analysis, log) into spec.out_dir. Outputs are deterministic for
/// a fixed spec, including seeds. Throws on invalid specs; an infeasible rule
/// in Photonic or Emulator mode reports the census as the reference.
ExperimentResult run_experiment(const ExperimentSpec& spec);

} // namespace peca
