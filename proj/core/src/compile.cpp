#include "peca/compile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace peca {

namespace {

struct Separation {
    double min_live;
    double max_dead;
    double margin; // min_live - max_dead; <= 0 means not separable
};

// Intensity separation of a weight triple against a rule's truth table. The
// live set is never empty here (rule 0 is special-cased by the caller).
Separation separation(const WeightTriple& w, const RuleTable& rule) {
    const auto intensities = neighborhood_intensities(w);
    double min_live = std::numeric_limits<double>::infinity();
    double max_dead = 0.0; // intensities are squares, so 0 is a true lower bound
    for (unsigned n = 0; n < 8; ++n) {
        if (rule.output(n))
            min_live = std::min(min_live, intensities[n]);
        else
            max_dead = std::max(max_dead, intensities[n]);
    }
    return {min_live, max_dead, min_live - max_dead};
}

double clamp_weight(double a) { return std::clamp(a, -1.0, 1.0); }

void append_double(std::string& out, double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    out += buf;
}

} // namespace

std::array<double, 8> neighborhood_amplitudes(const WeightTriple& w) {
    std::array<double, 8> y{};
    for (unsigned n = 0; n < 8; ++n) {
        const double l = (n >> 2) & 1u;
        const double c = (n >> 1) & 1u;
        const double r = n & 1u;
        y[n] = w.left * l + w.center * c + w.right * r;
    }
    return y;
}

std::array<double, 8> neighborhood_intensities(const WeightTriple& w) {
    auto values = neighborhood_amplitudes(w);
    for (auto& y : values)
        y = y * y;
    return values;
}

double max_abs_amplitude(const WeightTriple& w) {
    double best = 0.0;
    for (const double y : neighborhood_amplitudes(w))
        best = std::max(best, std::abs(y));
    return best;
}

bool verify_config(const PhotonicConfig& cfg, const RuleTable& rule) {
    const auto intensities = neighborhood_intensities(cfg.weights);
    for (unsigned n = 0; n < 8; ++n) {
        const bool live = intensities[n] > cfg.threshold;
        if (live != rule.output(n))
            return false;
    }
    return true;
}

CompilationResult compile_rule(int rule_number, int grid_steps) {
    if (grid_steps < 3)
        throw std::domain_error("grid_steps must be >= 3");
    const auto rule = RuleTable::from_number(rule_number);

    // Mirrored rules are realized by swapping the outer weights, so compile
    // the smaller rule number of each mirror pair and reflect the result;
    // feasibility and margin then match across the pair by construction.
    const int mirror_number = rule.mirrored().number();
    if (mirror_number < rule_number) {
        auto result = compile_rule(mirror_number, grid_steps);
        result.rule_number = rule_number;
        if (result.config) {
            std::swap(result.config->weights.left, result.config->weights.right);
            const auto sep = separation(result.config->weights, rule);
            result.config->threshold = (sep.max_dead + sep.min_live) / 2.0;
            result.margin = sep.margin;
        }
        return result;
    }

    if (rule.number() == 0) {
        // No live outputs: any weights work with the threshold above every
        // intensity. Margin 1 by convention (distance from threshold to the
        // largest dead intensity, which is 0 at zero weights).
        PhotonicConfig cfg{{0.0, 0.0, 0.0}, 1.0, {}};
        return {rule_number, cfg, 1.0, true};
    }

    const double spacing = 2.0 / (grid_steps - 1);
    const auto grid_value = [&](int k) { return -1.0 + spacing * k; };

    WeightTriple best{};
    double best_margin = 0.0;
    for (int i = 0; i < grid_steps; ++i)
        for (int j = 0; j < grid_steps; ++j)
            for (int k = 0; k < grid_steps; ++k) {
                const WeightTriple w{grid_value(i), grid_value(j), grid_value(k)};
                const double margin = separation(w, rule).margin;
                if (margin > best_margin) {
                    best_margin = margin;
                    best = w;
                }
            }

    if (best_margin <= 0.0)
        return {rule_number, std::nullopt, 0.0, false};

    // Local pattern refinement around the best grid cell.
    double step_size = spacing / 2.0;
    while (step_size >= 1e-7) {
        WeightTriple round_best = best;
        double round_margin = best_margin;
        for (int di = -1; di <= 1; ++di)
            for (int dj = -1; dj <= 1; ++dj)
                for (int dk = -1; dk <= 1; ++dk) {
                    if (di == 0 && dj == 0 && dk == 0)
                        continue;
                    const WeightTriple w{clamp_weight(best.left + di * step_size),
                                         clamp_weight(best.center + dj * step_size),
                                         clamp_weight(best.right + dk * step_size)};
                    const double margin = separation(w, rule).margin;
                    if (margin > round_margin) {
                        round_margin = margin;
                        round_best = w;
                    }
                }
        if (round_margin > best_margin) {
            best_margin = round_margin;
            best = round_best;
        } else {
            step_size /= 2.0;
        }
    }

    const auto sep = separation(best, rule);
    PhotonicConfig cfg{best, (sep.max_dead + sep.min_live) / 2.0, {}};
    return {rule_number, cfg, sep.margin, true};
}

std::vector<CompilationResult> feasibility_census(int grid_steps) {
    std::vector<CompilationResult> census;
    census.reserve(256);
    for (int rule = 0; rule < 256; ++rule)
        census.push_back(compile_rule(rule, grid_steps));
    return census;
}

std::size_t count_feasible(std::span<const CompilationResult> census) noexcept {
    std::size_t n = 0;
    for (const auto& entry : census)
        n += entry.feasible ? 1 : 0;
    return n;
}

std::string census_csv_string(std::span<const CompilationResult> census) {
    std::string out = "rule_number,feasible,a_minus1,a_zero,a_plus1,threshold,margin\n";
    for (const auto& entry : census) {
        out += std::to_string(entry.rule_number);
        out += entry.feasible ? ",1," : ",0,";
        const WeightTriple w = entry.config ? entry.config->weights : WeightTriple{};
        const double b = entry.config ? entry.config->threshold : 0.0;
        append_double(out, w.left);
        out += ',';
        append_double(out, w.center);
        out += ',';
        append_double(out, w.right);
        out += ',';
        append_double(out, b);
        out += ',';
        append_double(out, entry.margin);
        out += '\n';
    }
    return out;
}

void write_census_csv(std::ostream& out, std::span<const CompilationResult> census) {
    out << census_csv_string(census);
}

} // namespace peca
