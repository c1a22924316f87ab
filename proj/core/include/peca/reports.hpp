#pragma once

#include "peca/compile.hpp"
#include "peca/damage.hpp"
#include "peca/emulator.hpp"
#include "peca/fractal.hpp"
#include "peca/glider.hpp"
#include "peca/randomness.hpp"

#include <span>
#include <string>

namespace peca {

// JSON renderings of the analysis reports, stable across runs of the same
// inputs (keys are ordered, numbers print shortest-round-trip).
std::string to_json_string(const FractalReport& report);
std::string to_json_string(const DamageReport& report);
std::string to_json_string(const RandomnessReport& report);
std::string to_json_string(const EtherTiling& ether);
std::string to_json_string(const CompilationResult& result);
std::string to_json_string(const ThroughputReport& report);
std::string events_json_string(std::span<const GliderEvent> events);

} // namespace peca
