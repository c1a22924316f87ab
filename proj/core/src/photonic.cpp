#include "peca/photonic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace peca {

namespace {

// Portable Gaussian draw: Box-Muller on the standardized mt19937_64 stream,
// so fixed seeds replay identically across standard library implementations.
double gaussian(std::mt19937_64& rng) {
    const double u1 = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53; // (0, 1]
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;      // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Generation threshold_with(std::span<const double> amplitudes, double threshold,
                          double sigma, std::mt19937_64* rng, Boundary boundary,
                          std::vector<double>* intensities_out) {
    Generation next(amplitudes.size(), boundary);
    if (intensities_out) {
        intensities_out->clear();
        intensities_out->reserve(amplitudes.size());
    }
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        double magnitude = std::abs(amplitudes[i]);
        if (sigma > 0.0)
            magnitude += sigma * gaussian(*rng);
        const double intensity = magnitude * magnitude;
        if (intensity > threshold)
            next.set(i, true);
        if (intensities_out)
            intensities_out->push_back(intensity);
    }
    return next;
}

} // namespace

void validate(const PhotonicConfig& cfg) {
    const auto bad_weight = [](double a) { return !(std::abs(a) <= 1.0); };
    if (bad_weight(cfg.weights.left) || bad_weight(cfg.weights.center) ||
        bad_weight(cfg.weights.right))
        throw std::domain_error("weight magnitudes must be <= 1");
    if (!(cfg.threshold >= 0.0))
        throw std::domain_error("threshold must be >= 0");
    if (!(cfg.noise.amplitude_sigma >= 0.0))
        throw std::domain_error("noise sigma must be >= 0");
}

std::vector<double> interfere(const Generation& g, const WeightTriple& w) {
    const std::size_t width = g.width();
    const bool periodic = g.boundary() == Boundary::Periodic;
    std::vector<double> y(width);
    for (std::size_t i = 0; i < width; ++i) {
        const double l =
            i > 0 ? (g.get(i - 1) ? 1.0 : 0.0) : (periodic && g.get(width - 1) ? 1.0 : 0.0);
        const double c = g.get(i) ? 1.0 : 0.0;
        const double r =
            i + 1 < width ? (g.get(i + 1) ? 1.0 : 0.0) : (periodic && g.get(0) ? 1.0 : 0.0);
        y[i] = w.left * l + w.center * c + w.right * r;
    }
    return y;
}

std::vector<double> interfere_real(std::span<const double> cells, const WeightTriple& w,
                                   Boundary boundary) {
    const std::size_t width = cells.size();
    const bool periodic = boundary == Boundary::Periodic;
    std::vector<double> y(width);
    for (std::size_t i = 0; i < width; ++i) {
        const double l = i > 0 ? cells[i - 1] : (periodic ? cells[width - 1] : 0.0);
        const double c = cells[i];
        const double r = i + 1 < width ? cells[i + 1] : (periodic ? cells[0] : 0.0);
        y[i] = w.left * l + w.center * c + w.right * r;
    }
    return y;
}

Generation detect_threshold(std::span<const double> amplitudes, double threshold,
                            const NoiseSpec& noise, Boundary boundary) {
    if (!(threshold >= 0.0))
        throw std::domain_error("threshold must be >= 0");
    if (!(noise.amplitude_sigma >= 0.0))
        throw std::domain_error("noise sigma must be >= 0");
    std::mt19937_64 rng(noise.seed);
    return threshold_with(amplitudes, threshold, noise.amplitude_sigma, &rng, boundary, nullptr);
}

PhotonicStepResult photonic_step(const Generation& g, const PhotonicConfig& cfg) {
    validate(cfg);
    std::mt19937_64 rng(cfg.noise.seed);
    const auto amplitudes = interfere(g, cfg.weights);
    PhotonicStepResult result;
    result.next = threshold_with(amplitudes, cfg.threshold, cfg.noise.amplitude_sigma, &rng,
                                 g.boundary(), &result.intensities);
    return result;
}

SpaceTimeDiagram photonic_evolve(const Generation& initial, const PhotonicConfig& cfg,
                                 std::size_t steps) {
    validate(cfg);
    std::mt19937_64 rng(cfg.noise.seed); // one noise stream per run
    SpaceTimeDiagram d(initial);
    Generation current = initial;
    std::vector<double> intensities;
    for (std::size_t t = 0; t < steps; ++t) {
        const auto amplitudes = interfere(current, cfg.weights);
        current = threshold_with(amplitudes, cfg.threshold, cfg.noise.amplitude_sigma, &rng,
                                 current.boundary(), &intensities);
        d.push_state(current, intensities);
    }
    return d;
}

double extinction_ratio(const SpaceTimeDiagram& d) {
    if (!d.has_intensities())
        throw std::invalid_argument("extinction ratio requires a detected intensity field");
    double min_live = std::numeric_limits<double>::infinity();
    double max_dead = -1.0;
    bool saw_live = false, saw_dead = false;
    for (std::size_t t = 0; t < d.steps(); ++t) {
        const auto intensities = d.intensity_row(t);
        const auto& states = d.row(t + 1);
        for (std::size_t i = 0; i < intensities.size(); ++i) {
            if (states.get(i)) {
                saw_live = true;
                min_live = std::min(min_live, intensities[i]);
            } else {
                saw_dead = true;
                max_dead = std::max(max_dead, intensities[i]);
            }
        }
    }
    if (!saw_live || !saw_dead)
        throw std::invalid_argument("extinction ratio needs both live and dead cells");
    if (max_dead == 0.0)
        return std::numeric_limits<double>::infinity();
    return min_live / max_dead;
}

} // namespace peca
