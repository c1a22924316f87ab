#pragma once

#include "peca/photonic.hpp"
#include "peca/rule.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace peca {

/// Recombined amplitudes w.x for the eight neighborhoods, indexed by
/// n = 4l + 2c + r. Every other intensity computation in the project reuses
/// these exact expressions, so thresholds compare bit-identically.
std::array<double, 8> neighborhood_amplitudes(const WeightTriple& w);

/// Detected intensities (w.x)^2 for the eight neighborhoods.
std::array<double, 8> neighborhood_intensities(const WeightTriple& w);

/// Largest |w.x| over the eight neighborhoods.
double max_abs_amplitude(const WeightTriple& w);

/// True iff zero-noise thresholding of every neighborhood intensity
/// reproduces the rule's truth table.
bool verify_config(const PhotonicConfig& cfg, const RuleTable& rule);

struct CompilationResult {
    int rule_number = 0;
    std::optional<PhotonicConfig> config; ///< present iff feasible
    double margin = 0.0;                  ///< min live intensity - max dead intensity
    bool feasible = false;
};

/// Search the weight cube for the triple that maximizes the separation
/// between live-output and dead-output intensities: a uniform grid of
/// grid_steps points per axis followed by local pattern refinement around
/// the best cell. The threshold is placed at the midpoint of the separating
/// gap. Rules whose live-output set is empty (rule 0) get zero weights and
/// threshold 1 by convention, with margin 1.
CompilationResult compile_rule(int rule_number, int grid_steps = 41);

/// compile_rule for every rule number 0..255, in order. Deterministic for a
/// fixed grid_steps.
std::vector<CompilationResult> feasibility_census(int grid_steps = 41);

std::size_t count_feasible(std::span<const CompilationResult> census) noexcept;

/// CSV export: rule_number,feasible,a_minus1,a_zero,a_plus1,threshold,margin.
void write_census_csv(std::ostream& out, std::span<const CompilationResult> census);
std::string census_csv_string(std::span<const CompilationResult> census);

} // namespace peca
