#pragma once

#include "peca/diagram.hpp"
#include "peca/generation.hpp"
#include "peca/photonic.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace peca {

/// Exact rational quantity; modeled loop timings stay closed-form instead of
/// accumulating float error.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    Rational operator*(std::int64_t k) const;
    Rational operator+(const Rational& other) const;
    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) noexcept = default;
};

/// Time-multiplexed loop parameters: one lattice site per pulse slot, one
/// slot per repetition period.
struct PulseTrainConfig {
    Rational repetition_period_ns{4, 1}; ///< T_R
    std::size_t num_pulses = 0;          ///< lattice width
    PhotonicConfig optics;
};

struct LoopIteration {
    std::vector<double> encoded;     ///< modulator output amplitudes (0/1)
    std::vector<double> recombined;  ///< after the +-T_R delay-line sum
    std::vector<double> intensities; ///< detected (|y| + eps)^2
    Generation bits;                 ///< thresholded feedback state
};

struct LoopTrace {
    PulseTrainConfig config;
    Generation initial;
    std::vector<LoopIteration> iterations;
    double emulator_seconds = 0.0; ///< wall-clock time spent simulating

    /// Modeled time per loop iteration: num_pulses * T_R.
    Rational iteration_latency_ns() const;
};

/// Discrete-event model of the loop: encode bits as pulse amplitudes, split
/// into three weighted copies, shift them by -1/0/+1 slots, sum per slot,
/// detect, threshold, and feed the bits back as the next iteration's input.
/// Thresholded rows reproduce photonic_evolve exactly.
LoopTrace run_loop(const Generation& initial, const PulseTrainConfig& cfg,
                   std::size_t iterations);

struct ThroughputReport {
    double modeled_updates_per_second = 0.0;  ///< 1 / T_R: one cell per slot
    double emulator_updates_per_second = 0.0; ///< measured simulation rate
};

/// Throws std::invalid_argument for a trace with no iterations.
ThroughputReport throughput_report(const LoopTrace& trace);

/// One JSON record per iteration: amplitudes, intensities, bits.
void write_trace_jsonl(std::ostream& out, const LoopTrace& trace);

/// States (and detected intensities) of the trace as a space-time diagram.
SpaceTimeDiagram trace_to_diagram(const LoopTrace& trace);

} // namespace peca
