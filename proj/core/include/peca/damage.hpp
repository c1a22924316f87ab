#pragma once

#include "peca/diagram.hpp"
#include "peca/generation.hpp"
#include "peca/rule.hpp"

#include <cstddef>
#include <vector>

namespace peca {

/// Extent of the twin-run difference region at one step. Only rows with at
/// least one differing cell produce a sample.
struct FrontierSample {
    std::size_t step = 0;
    std::size_t left = 0;  ///< lowest differing cell index
    std::size_t right = 0; ///< highest differing cell index
};

struct DamageReport {
    SpaceTimeDiagram difference; ///< XOR of the twin runs, row by row
    std::vector<FrontierSample> frontiers;
    double lambda_left = 0.0;  ///< leftward speed, fitted over the tail half
    double lambda_right = 0.0; ///< rightward speed, fitted over all rows
};

/// Evolve the initial condition and a copy with one flipped cell, XOR the
/// rows, and fit the frontier growth speeds (cells per step, positive
/// outward). The rightward fit spans every sampled row; the leftward fit
/// spans rows in the tail half of the run, where the growth is asymptotic.
/// Throws std::runtime_error when a frontier reaches the lattice boundary
/// (the lattice must be widened).
DamageReport damage_spreading(const RuleTable& rule, const Generation& initial,
                              std::size_t flip_index, std::size_t steps);

} // namespace peca
