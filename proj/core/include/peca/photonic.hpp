#pragma once

#include "peca/diagram.hpp"
#include "peca/generation.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace peca {

/// Signed interference weights of the -T_R / 0 / +T_R delay lines. The
/// magnitude is the attenuator transmission, the sign the 0-or-pi relative
/// phase, so each weight lies in [-1, 1].
struct WeightTriple {
    double left = 0.0;   ///< a_{-1}, applied to x_{i-1}
    double center = 0.0; ///< a_0, applied to x_i
    double right = 0.0;  ///< a_{+1}, applied to x_{i+1}

    friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
};

/// Additive Gaussian perturbation of the recombined amplitude before
/// detection. sigma == 0 models a noiseless loop and draws nothing.
struct NoiseSpec {
    double amplitude_sigma = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

/// One physical realization of a rule: weights, detection threshold, noise.
struct PhotonicConfig {
    WeightTriple weights;
    double threshold = 0.0;
    NoiseSpec noise;

    friend bool operator==(const PhotonicConfig&, const PhotonicConfig&) = default;
};

/// Throws std::domain_error when a weight magnitude exceeds 1, the threshold
/// is negative, or the noise sigma is negative.
void validate(const PhotonicConfig& cfg);

/// Delay-line recombination: y[i] = a_{-1} x_{i-1} + a_0 x_i + a_{+1} x_{i+1},
/// with neighbors resolved by the generation's boundary. Cells enter as
/// amplitudes 0.0 / 1.0.
std::vector<double> interfere(const Generation& g, const WeightTriple& w);

/// Same recombination on a real-valued cell vector (linearity checks and
/// relaxations).
std::vector<double> interfere_real(std::span<const double> cells, const WeightTriple& w,
                                   Boundary boundary);

/// Intensity detection and thresholding: cell i is live iff
/// (|y[i]| + eps_i)^2 > threshold, strictly, with eps ~ N(0, sigma^2).
Generation detect_threshold(std::span<const double> amplitudes, double threshold,
                            const NoiseSpec& noise, Boundary boundary = Boundary::FixedDead);

struct PhotonicStepResult {
    Generation next;
    std::vector<double> intensities; ///< detected (|y| + eps)^2 per cell
};

/// interfere + detect_threshold, also reporting the detected intensities.
PhotonicStepResult photonic_step(const Generation& g, const PhotonicConfig& cfg);

/// Iterate photonic_step, recording every state row and intensity row.
/// The noise stream is drawn once per run from cfg.noise.seed, so a fixed
/// seed replays exactly.
SpaceTimeDiagram photonic_evolve(const Generation& initial, const PhotonicConfig& cfg,
                                 std::size_t steps);

/// Minimum live-cell intensity divided by maximum dead-cell intensity over
/// the whole run (+infinity when every dead cell detected exactly zero).
/// Requires intensities and at least one live and one dead cell.
double extinction_ratio(const SpaceTimeDiagram& d);

} // namespace peca
