#include "peca/emulator.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <utility>

namespace peca {

namespace {

// Same Box-Muller draw as the photonic module, so traces replay the exact
// noise stream of photonic_evolve for equal seeds.
double gaussian(std::mt19937_64& rng) {
    const double u1 = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator*(std::int64_t k) const { return Rational(num * k, den); }

Rational Rational::operator+(const Rational& other) const {
    return Rational(num * other.den + other.num * den, den * other.den);
}

std::string Rational::to_string() const {
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational LoopTrace::iteration_latency_ns() const {
    return config.repetition_period_ns * static_cast<std::int64_t>(config.num_pulses);
}

LoopTrace run_loop(const Generation& initial, const PulseTrainConfig& cfg,
                   std::size_t iterations) {
    if (cfg.num_pulses != initial.width())
        throw std::invalid_argument("num_pulses must equal the lattice width");
    if (!(cfg.repetition_period_ns.num > 0))
        throw std::invalid_argument("repetition period must be positive");
    validate(cfg.optics);

    const std::size_t width = initial.width();
    const bool periodic = initial.boundary() == Boundary::Periodic;
    const WeightTriple w = cfg.optics.weights;
    const double sigma = cfg.optics.noise.amplitude_sigma;
    std::mt19937_64 rng(cfg.optics.noise.seed);

    LoopTrace trace;
    trace.config = cfg;
    trace.initial = initial;
    trace.iterations.reserve(iterations);

    const auto start = std::chrono::steady_clock::now();
    Generation state = initial;
    std::vector<double> delayed(width), undelayed(width), advanced(width);
    for (std::size_t iter = 0; iter < iterations; ++iter) {
        LoopIteration record;

        // Encode the feedback bits onto the pulse train.
        record.encoded.resize(width);
        for (std::size_t i = 0; i < width; ++i)
            record.encoded[i] = state.get(i) ? 1.0 : 0.0;

        // Three weighted copies: the +T_R line delays each pulse one slot,
        // the -T_R line advances it one slot, the 0 line passes through.
        for (std::size_t i = 0; i < width; ++i) {
            const double prev =
                i > 0 ? record.encoded[i - 1] : (periodic ? record.encoded[width - 1] : 0.0);
            const double next =
                i + 1 < width ? record.encoded[i + 1] : (periodic ? record.encoded[0] : 0.0);
            delayed[i] = w.left * prev;
            undelayed[i] = w.center * record.encoded[i];
            advanced[i] = w.right * next;
        }

        // Recombine per slot, detect, threshold.
        record.recombined.resize(width);
        record.intensities.resize(width);
        Generation next(width, initial.boundary());
        for (std::size_t i = 0; i < width; ++i) {
            record.recombined[i] = delayed[i] + undelayed[i] + advanced[i];
            double magnitude = std::abs(record.recombined[i]);
            if (sigma > 0.0)
                magnitude += sigma * gaussian(rng);
            record.intensities[i] = magnitude * magnitude;
            if (record.intensities[i] > cfg.optics.threshold)
                next.set(i, true);
        }
        record.bits = next;
        trace.iterations.push_back(std::move(record));
        state = std::move(next);
    }
    trace.emulator_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return trace;
}

ThroughputReport throughput_report(const LoopTrace& trace) {
    if (trace.iterations.empty())
        throw std::invalid_argument("throughput report requires a non-empty trace");
    ThroughputReport report;
    // One cell update per pulse slot, one slot per repetition period.
    report.modeled_updates_per_second =
        1.0e9 * static_cast<double>(trace.config.repetition_period_ns.den) /
        static_cast<double>(trace.config.repetition_period_ns.num);
    const double updates =
        static_cast<double>(trace.iterations.size()) * static_cast<double>(trace.config.num_pulses);
    report.emulator_updates_per_second =
        trace.emulator_seconds > 0.0 ? updates / trace.emulator_seconds : 0.0;
    return report;
}

void write_trace_jsonl(std::ostream& out, const LoopTrace& trace) {
    for (std::size_t t = 0; t < trace.iterations.size(); ++t) {
        const auto& it = trace.iterations[t];
        nlohmann::json record;
        record["iteration"] = t;
        record["encoded"] = it.encoded;
        record["recombined"] = it.recombined;
        record["intensities"] = it.intensities;
        record["bits"] = it.bits.to_string();
        out << record.dump() << '\n';
    }
}

SpaceTimeDiagram trace_to_diagram(const LoopTrace& trace) {
    SpaceTimeDiagram d(trace.initial);
    for (const auto& it : trace.iterations)
        d.push_state(it.bits, it.intensities);
    return d;
}

} // namespace peca
